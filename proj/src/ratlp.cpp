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

#include "blockip/ratlp.hpp"

#include <optional>
#include <string>

namespace blockip {

namespace {

enum class VarState { kBasic, kAtLower, kAtUpper };

// Tableau over shifted variables x' = x - lower in [0, range]. Artificial
// variables are numbered n..n+m-1; their columns are never stored because
// they leave the basis for good.
class Simplex {
 public:
  Simplex(const LpProblem& p) : n_(p.variable_count()), m_(p.row_count()) {
    range_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) range_[j] = p.upper[j] - p.lower[j];
    state_.assign(n_, VarState::kAtLower);
    rows_.resize(m_);
    beta_.resize(m_);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      BigRational rhs = p.eq_rhs[i];
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(p.eq_matrix[i][j]) != 0) rhs -= p.eq_matrix[i][j] * p.lower[j];
      }
      rows_[i] = p.eq_matrix[i];
      if (sgn(rhs) < 0) {
        rhs = -rhs;
        for (BigRational& a : rows_[i]) a = -a;
      }
      beta_[i] = rhs;
      basis_[i] = n_ + i;
    }
  }

  // Returns false when the equalities have no solution in the box.
  bool phase_one() {
    phase_ = 1;
    cost_.assign(n_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) cost_[j] += rows_[i][j];
    }
    run();
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_ && sgn(beta_[i]) != 0) return false;
    }
    return true;
  }

  bool phase_two(const RatVector& objective) {
    phase_ = 2;
    cost_ = objective;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) continue;
      const BigRational& cb = objective[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(rows_[i][j]) != 0) cost_[j] -= cb * rows_[i][j];
      }
    }
    return run();
  }

  RatVector shifted_point() const {
    RatVector x(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (state_[j] == VarState::kAtUpper) x[j] = range_[j];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = beta_[i];
    }
    return x;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  // Upper bound of basic variable `v`; nullopt when unbounded above.
  std::optional<BigRational> basic_upper(std::size_t v) const {
    if (v < n_) return range_[v];
    if (phase_ == 2) return BigRational(0);
    return std::nullopt;
  }

  // Iterates until no improving column remains. False when unbounded.
  bool run() {
    for (;;) {
      std::size_t s = n_;
      int dir = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        if (state_[j] == VarState::kBasic || sgn(range_[j]) == 0) continue;
        const int d = sgn(cost_[j]);
        if (state_[j] == VarState::kAtLower && d > 0) {
          s = j;
          dir = 1;
          break;
        }
        if (state_[j] == VarState::kAtUpper && d < 0) {
          s = j;
          dir = -1;
          break;
        }
      }
      if (s == n_) return true;

      // Ratio test; ties go to the basic variable with the smallest index.
      std::optional<BigRational> best;
      std::size_t leave_row = m_;
      bool leave_to_upper = false;
      for (std::size_t i = 0; i < m_; ++i) {
        const int a = sgn(rows_[i][s]) * dir;
        if (a == 0) continue;
        BigRational t;
        bool to_upper = false;
        if (a > 0) {
          t = beta_[i] / abs(rows_[i][s]);
        } else {
          auto up = basic_upper(basis_[i]);
          if (!up) continue;
          t = (*up - beta_[i]) / abs(rows_[i][s]);
          to_upper = true;
        }
        if (!best || t < *best ||
            (t == *best && basis_[i] < basis_[leave_row])) {
          best = t;
          leave_row = i;
          leave_to_upper = to_upper;
        }
      }

      const bool flip = !best || range_[s] <= *best;
      if (flip) {
        // The entering variable reaches its opposite bound first.
        const BigRational& t = range_[s];
        for (std::size_t i = 0; i < m_; ++i) {
          if (sgn(rows_[i][s]) != 0) beta_[i] -= rows_[i][s] * t * dir;
        }
        state_[s] = dir > 0 ? VarState::kAtUpper : VarState::kAtLower;
        continue;
      }
      const BigRational t = *best;
      const BigRational entering =
          (dir > 0 ? BigRational(0) : range_[s]) + t * dir;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(rows_[i][s]) != 0) beta_[i] -= rows_[i][s] * t * dir;
      }
      pivot(leave_row, s);
      const std::size_t leaving = basis_[leave_row];
      if (leaving < n_) {
        state_[leaving] = leave_to_upper ? VarState::kAtUpper : VarState::kAtLower;
      }
      basis_[leave_row] = s;
      state_[s] = VarState::kBasic;
      beta_[leave_row] = entering;
    }
  }

  void pivot(std::size_t r, std::size_t s) {
    ++pivots_;
    RatVector& prow = rows_[r];
    const BigRational inv = 1 / prow[s];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n_; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        support.push_back(j);
      }
    }
    auto eliminate = [&](RatVector& row) {
      if (sgn(row[s]) == 0) return;
      const BigRational f = row[s];
      for (std::size_t j : support) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(cost_);
  }

  std::size_t n_;
  std::size_t m_;
  int phase_ = 1;
  RatVector range_;
  std::vector<VarState> state_;
  std::vector<RatVector> rows_;
  RatVector beta_;
  std::vector<std::size_t> basis_;
  RatVector cost_;
  std::size_t pivots_ = 0;
};

void check_well_formed(const LpProblem& p) {
  const std::size_t n = p.variable_count();
  if (p.lower.size() != n || p.upper.size() != n) {
    throw MalformedProblem("solve_lp: bound vectors do not match objective length");
  }
  if (p.eq_rhs.size() != p.row_count()) {
    throw MalformedProblem("solve_lp: rhs length does not match row count");
  }
  for (const RatVector& row : p.eq_matrix) {
    if (row.size() != n) throw MalformedProblem("solve_lp: ragged constraint row");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (p.lower[j] > p.upper[j]) {
      throw MalformedProblem("solve_lp: lower > upper for variable " +
                             std::to_string(j));
    }
  }
}

}  // namespace

LpResult solve_lp(const LpProblem& input) {
  // mpq arithmetic assumes canonical operands; callers may hand in 6/2.
  LpProblem problem = input;
  for (RatVector* v : {&problem.objective, &problem.lower, &problem.upper, &problem.eq_rhs}) {
    for (BigRational& q : *v) q.canonicalize();
  }
  for (RatVector& row : problem.eq_matrix) {
    for (BigRational& q : row) q.canonicalize();
  }
  check_well_formed(problem);
  Simplex simplex(problem);
  LpResult result;
  if (!simplex.phase_one()) {
    result.status = LpStatus::kInfeasible;
    result.pivots = simplex.pivots();
    return result;
  }
  if (!simplex.phase_two(problem.objective)) {
    result.status = LpStatus::kUnbounded;
    result.pivots = simplex.pivots();
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.pivots = simplex.pivots();
  result.point = simplex.shifted_point();
  result.value = 0;
  for (std::size_t j = 0; j < problem.variable_count(); ++j) {
    result.point[j] += problem.lower[j];
    result.value += problem.objective[j] * result.point[j];
  }
  for (std::size_t i = 0; i < problem.row_count(); ++i) {
    BigRational lhs = 0;
    for (std::size_t j = 0; j < problem.variable_count(); ++j) {
      if (sgn(problem.eq_matrix[i][j]) != 0) {
        lhs += problem.eq_matrix[i][j] * result.point[j];
      }
    }
    if (lhs != problem.eq_rhs[i]) {
      throw InternalInconsistency("solve_lp: optimal point violates row " +
                                  std::to_string(i));
    }
  }
  return result;
}

}  // namespace blockip
