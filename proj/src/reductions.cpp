// Copyright 2026 The blockip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockip/reductions.hpp"

#include <string>

namespace blockip {

namespace {

void check_positive(const SubsetSumInstance& s) {
  if (s.target < 1) throw PreconditionError("subset-sum target must be >= 1");
  for (const BigInt& beta : s.betas) {
    if (beta < 1) throw PreconditionError("subset-sum betas must be >= 1");
  }
}

void check_betas_fit(const SubsetSumInstance& s) {
  for (std::size_t i = 0; i < s.betas.size(); ++i) {
    if (s.betas[i] > s.target) {
      throw BetaExceedsTarget("beta_" + std::to_string(i + 1) + " = " +
                              to_decimal(s.betas[i]) + " exceeds target " +
                              to_decimal(s.target));
    }
  }
}

IntMatrix row_matrix(const IntVector& entries) {
  return IntMatrix::from_rows({entries});
}

}  // namespace

std::vector<ValidationIssue> validate(const GeneralizedNFoldInstance& g) {
  std::vector<ValidationIssue> issues;
  auto shape = [&](bool ok, const std::string& what) {
    if (!ok) issues.push_back({ValidationCode::kShapeMismatch, what});
  };
  shape(g.A_blocks.size() == g.n, "number of A blocks != n");
  shape(g.D_blocks.size() == g.n, "number of D blocks != n");
  shape(g.b.size() == g.n, "number of brick right-hand sides != n");
  if (!issues.empty()) return issues;
  const std::size_t t = g.brick_width();
  for (std::size_t i = 0; i < g.n; ++i) {
    shape(g.A_blocks[i].cols() == t, "A block widths differ");
    shape(g.D_blocks[i].cols() == t, "D block widths differ");
    shape(g.D_blocks[i].rows() == g.b0.size(), "D block rows != b0 length");
    shape(g.b[i].size() == g.A_blocks[i].rows(), "b^i length != A_i rows");
  }
  const std::size_t N = g.variable_count();
  shape(g.l.size() == N && g.u.size() == N && g.w.size() == N,
        "l/u/w length != n*t_A");
  if (g.l.size() == g.u.size()) {
    for (std::size_t j = 0; j < g.l.size(); ++j) {
      if (g.l[j] > g.u[j]) {
        issues.push_back({ValidationCode::kLowerExceedsUpper,
                          "l[" + std::to_string(j) + "] > u[" +
                              std::to_string(j) + "]"});
      }
    }
  }
  return issues;
}

FlatIp flatten(const GeneralizedNFoldInstance& g) {
  FlatIp ip;
  ip.l = g.l;
  ip.u = g.u;
  ip.w = g.w;
  const std::size_t t = g.brick_width();
  for (std::size_t r = 0; r < g.b0.size(); ++r) {
    LinearRow row;
    row.rhs = g.b0[r];
    for (std::size_t i = 0; i < g.n; ++i) {
      for (std::size_t c = 0; c < t; ++c) {
        const BigInt& coef = g.D_blocks[i](r, c);
        if (coef != 0) row.terms.emplace_back(i * t + c, coef);
      }
    }
    ip.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t r = 0; r < g.A_blocks[i].rows(); ++r) {
      LinearRow row;
      row.rhs = g.b[i][r];
      for (std::size_t c = 0; c < t; ++c) {
        const BigInt& coef = g.A_blocks[i](r, c);
        if (coef != 0) row.terms.emplace_back(i * t + c, coef);
      }
      ip.rows.push_back(std::move(row));
    }
  }
  return ip;
}

bool is_feasible(const GeneralizedNFoldInstance& g, const IntVector& x) {
  if (x.size() != g.variable_count()) return false;
  const FlatIp ip = flatten(g);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < ip.l[j] || x[j] > ip.u[j]) return false;
  }
  for (const LinearRow& row : ip.rows) {
    BigInt lhs = 0;
    for (const auto& [var, coef] : row.terms) lhs += coef * x[var];
    if (lhs != row.rhs) return false;
  }
  return true;
}

NFoldInstance encode_subset_sum_nfold(const SubsetSumInstance& s) {
  check_positive(s);
  check_betas_fit(s);
  const BigInt& delta = s.target;
  const std::size_t n = s.betas.size();
  IntVector l, u;
  for (const BigInt& beta : s.betas) {
    l.insert(l.end(), {0, 0, 0});
    u.insert(u.end(), {beta, delta - beta, 1});
  }
  return NFoldInstance(n, row_matrix({1, 1, delta}), row_matrix({1, 0, 0}),
                       {delta}, std::vector<IntVector>(n, IntVector{delta}),
                       std::move(l), std::move(u), IntVector(3 * n, 0));
}

GeneralizedNFoldInstance encode_subset_sum_weighted_coupling(
    const SubsetSumInstance& s) {
  check_positive(s);
  const BigInt& delta = s.target;
  GeneralizedNFoldInstance g;
  g.n = s.betas.size();
  g.b0 = {delta};
  for (const BigInt& beta : s.betas) {
    g.A_blocks.push_back(row_matrix({delta, 1}));
    g.D_blocks.push_back(row_matrix({beta, 0}));
    g.b.push_back({delta});
    g.l.insert(g.l.end(), {0, 0});
    g.u.insert(g.u.end(), {1, delta});
  }
  g.w.assign(2 * g.n, 0);
  return g;
}

GeneralizedNFoldInstance encode_subset_sum_varying_blocks(
    const SubsetSumInstance& s) {
  check_positive(s);
  GeneralizedNFoldInstance g;
  g.n = s.betas.size();
  g.b0 = {s.target};
  for (const BigInt& beta : s.betas) {
    g.A_blocks.push_back(row_matrix({1, beta}));
    g.D_blocks.push_back(row_matrix({1, 0}));
    g.b.push_back({beta});
    g.l.insert(g.l.end(), {0, 0});
    g.u.insert(g.u.end(), {beta, 1});
  }
  g.w.assign(2 * g.n, 0);
  return g;
}

NFoldInstance encode_cardinality_scheduling(const SubsetSumInstance& s,
                                            std::size_t k) {
  check_positive(s);
  check_betas_fit(s);
  const std::size_t n = s.betas.size();
  if (k > n) throw PreconditionError("scheduling: k must not exceed n");
  const BigInt& delta = s.target;
  IntVector l, u;
  for (const BigInt& beta : s.betas) {
    l.insert(l.end(), {0, 0, 0});
    u.insert(u.end(), {beta, delta - beta, 1});
  }
  // Total work is n * target, so a makespan of target fills every machine
  // exactly and the per-machine load row is an equality.
  const BigInt type2 = (BigInt(static_cast<unsigned long>(n)) -
                        static_cast<unsigned long>(k) - 1) *
                       delta;
  return NFoldInstance(
      n, row_matrix({1, 1, delta}), IntMatrix::identity(3),
      {delta, type2, BigInt(static_cast<unsigned long>(k))},
      std::vector<IntVector>(n, IntVector{delta}), std::move(l), std::move(u),
      IntVector(3 * n, 0));
}

}  // namespace blockip
