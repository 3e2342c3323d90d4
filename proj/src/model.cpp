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

#include "blockip/model.hpp"

#include <sstream>

#include "blockip/errors.hpp"
#include "blockip/intlin.hpp"

namespace blockip {

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols) {
  if (rows.empty()) return IntMatrix(0, cols);
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw DimensionMismatch("IntMatrix: ragged rows");
    }
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const BigInt& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + r * cols_,
                   entries_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("IntMatrix product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("IntMatrix-vector product");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

BigInt IntMatrix::max_abs() const {
  BigInt best = 0;
  for (const BigInt& e : entries_) {
    if (mpz_cmpabs(e.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(e);
  }
  return best;
}

IntVector FourBlockInstance::brick(const IntVector& v, std::size_t i) const {
  const std::size_t off = brick_offset(i);
  return IntVector(v.begin() + off, v.begin() + off + brick_size(i));
}

NFoldInstance::NFoldInstance(FourBlockInstance instance)
    : instance_(std::move(instance)) {
  if (!instance_.is_nfold()) {
    throw PreconditionError("NFoldInstance: B and C must be zero");
  }
}

NFoldInstance::NFoldInstance(std::size_t n, IntMatrix A, IntMatrix D,
                             IntVector b0, std::vector<IntVector> b,
                             IntVector l, IntVector u, IntVector w) {
  instance_.n = n;
  instance_.B = IntMatrix(A.rows(), 0);
  instance_.C = IntMatrix(D.rows(), 0);
  instance_.A = std::move(A);
  instance_.D = std::move(D);
  instance_.b0 = std::move(b0);
  instance_.b = std::move(b);
  instance_.l = std::move(l);
  instance_.u = std::move(u);
  instance_.w = std::move(w);
}

std::optional<NFoldInstance> NFoldInstance::from(
    const FourBlockInstance& instance) {
  if (!instance.is_nfold()) return std::nullopt;
  return NFoldInstance(instance);
}

std::string_view to_string(SolverTag tag) {
  switch (tag) {
    case SolverTag::kOnes:
      return "ones";
    case SolverTag::kNfoldSnf:
      return "nfold_snf";
    case SolverTag::kFourBlockSnf:
      return "fourblock_snf";
    case SolverTag::kBruteforce:
      return "bruteforce";
  }
  return "unknown";
}

std::optional<SolverTag> parse_solver_tag(std::string_view text) {
  for (SolverTag t : {SolverTag::kOnes, SolverTag::kNfoldSnf,
                      SolverTag::kFourBlockSnf, SolverTag::kBruteforce}) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

std::string_view to_string(StructureClass tag) {
  switch (tag) {
    case StructureClass::kAllOnesRow:
      return "AllOnesRow";
    case StructureClass::kSnfEligible:
      return "SnfEligible";
    case StructureClass::kNFoldSnfEligible:
      return "NFoldSnfEligible";
    case StructureClass::kHardTaGeSaPlus2:
      return "Hard_tA_ge_sA_plus_2";
    case StructureClass::kGeneral:
      return "General";
  }
  return "unknown";
}

std::string_view to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::kShapeMismatch:
      return "ShapeMismatch";
    case ValidationCode::kInfiniteBound:
      return "InfiniteBound";
    case ValidationCode::kLowerExceedsUpper:
      return "LowerExceedsUpper";
  }
  return "unknown";
}

std::vector<ValidationIssue> validate(const FourBlockInstance& inst) {
  std::vector<ValidationIssue> issues;
  auto shape = [&](bool ok, const std::string& what) {
    if (!ok) issues.push_back({ValidationCode::kShapeMismatch, what});
  };
  shape(inst.C.rows() == inst.D.rows(), "s_C != s_D");
  shape(inst.A.rows() == inst.B.rows(), "s_A != s_B");
  shape(inst.B.cols() == inst.C.cols(), "t_B != t_C");
  shape(inst.A.cols() == inst.D.cols(), "t_A != t_D");
  shape(inst.b0.size() == inst.D.rows(), "b0 length != s_D");
  shape(inst.b.size() == inst.n, "number of brick right-hand sides != n");
  for (std::size_t i = 0; i < inst.b.size(); ++i) {
    shape(inst.b[i].size() == inst.A.rows(),
          "b[" + std::to_string(i + 1) + "] length != s_A");
  }
  const std::size_t N = inst.variable_count();
  shape(inst.l.size() == N, "l length != t_B + n*t_A");
  shape(inst.u.size() == N, "u length != t_B + n*t_A");
  shape(inst.w.size() == N, "w length != t_B + n*t_A");
  if (inst.l.size() == inst.u.size()) {
    for (std::size_t j = 0; j < inst.l.size(); ++j) {
      if (inst.l[j] > inst.u[j]) {
        issues.push_back({ValidationCode::kLowerExceedsUpper,
                          "l[" + std::to_string(j) + "] = " +
                              to_decimal(inst.l[j]) + " > u[" +
                              std::to_string(j) + "] = " +
                              to_decimal(inst.u[j])});
      }
    }
  }
  return issues;
}

StructureClass classify(const FourBlockInstance& inst) {
  const std::size_t s_a = inst.brick_rows();
  const std::size_t t_a = inst.brick_width();

  bool all_ones = s_a == 1 && t_a >= 1;
  for (std::size_t j = 0; all_ones && j < t_a; ++j) {
    all_ones = inst.A(0, j) == 1;
  }
  if (all_ones) return StructureClass::kAllOnesRow;

  if (t_a == s_a + 1 && integer_rank(inst.A) == s_a) {
    return inst.is_nfold() ? StructureClass::kNFoldSnfEligible
                           : StructureClass::kSnfEligible;
  }
  if (t_a >= s_a + 2) return StructureClass::kHardTaGeSaPlus2;
  return StructureClass::kGeneral;
}

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kGlobalRow:
      os << "global row " << index << ": lhs " << lhs << " != rhs " << rhs;
      break;
    case Kind::kBrickRow:
      os << "brick " << brick << " row " << index << ": lhs " << lhs
         << " != rhs " << rhs;
      break;
    case Kind::kLowerBound:
      os << "brick " << brick << " coordinate " << index << ": value " << lhs
         << " < lower bound " << rhs;
      break;
    case Kind::kUpperBound:
      os << "brick " << brick << " coordinate " << index << ": value " << lhs
         << " > upper bound " << rhs;
      break;
  }
  return os.str();
}

Evaluation evaluate(const FourBlockInstance& inst, const IntVector& x) {
  if (x.size() != inst.variable_count()) {
    throw DimensionMismatch("evaluate: x has " + std::to_string(x.size()) +
                            " entries, instance has " +
                            std::to_string(inst.variable_count()) +
                            " variables");
  }
  Evaluation ev;
  ev.objective = dot(inst.w, x);

  const IntVector head = inst.brick(x, 0);
  const IntVector c_head = inst.C * head;
  const IntVector b_head = inst.B * head;

  IntVector global = c_head;
  for (std::size_t i = 1; i <= inst.n; ++i) {
    const IntVector xi = inst.brick(x, i);
    const IntVector d_part = inst.D * xi;
    for (std::size_t r = 0; r < global.size(); ++r) global[r] += d_part[r];
    const IntVector a_part = inst.A * xi;
    for (std::size_t r = 0; r < a_part.size(); ++r) {
      BigInt lhs = b_head[r] + a_part[r];
      if (lhs != inst.b[i - 1][r]) {
        ev.violations.push_back({Violation::Kind::kBrickRow, i, r,
                                 std::move(lhs), inst.b[i - 1][r]});
      }
    }
  }
  for (std::size_t r = 0; r < global.size(); ++r) {
    if (global[r] != inst.b0[r]) {
      ev.violations.push_back(
          {Violation::Kind::kGlobalRow, 0, r, global[r], inst.b0[r]});
    }
  }
  for (std::size_t i = 0; i <= inst.n; ++i) {
    const std::size_t off = inst.brick_offset(i);
    for (std::size_t h = 0; h < inst.brick_size(i); ++h) {
      const std::size_t j = off + h;
      if (x[j] < inst.l[j]) {
        ev.violations.push_back(
            {Violation::Kind::kLowerBound, i, h, x[j], inst.l[j]});
      } else if (x[j] > inst.u[j]) {
        ev.violations.push_back(
            {Violation::Kind::kUpperBound, i, h, x[j], inst.u[j]});
      }
    }
  }
  ev.feasible = ev.violations.empty();
  return ev;
}

FlatIp flatten(const FourBlockInstance& inst) {
  FlatIp ip;
  ip.l = inst.l;
  ip.u = inst.u;
  ip.w = inst.w;
  const std::size_t t_b = inst.head_width();
  const std::size_t t_a = inst.brick_width();
  for (std::size_t r = 0; r < inst.global_rows(); ++r) {
    LinearRow row;
    row.rhs = inst.b0[r];
    for (std::size_t c = 0; c < t_b; ++c) {
      if (inst.C(r, c) != 0) row.terms.emplace_back(c, inst.C(r, c));
    }
    for (std::size_t i = 1; i <= inst.n; ++i) {
      const std::size_t off = inst.brick_offset(i);
      for (std::size_t c = 0; c < t_a; ++c) {
        if (inst.D(r, c) != 0) row.terms.emplace_back(off + c, inst.D(r, c));
      }
    }
    ip.rows.push_back(std::move(row));
  }
  for (std::size_t i = 1; i <= inst.n; ++i) {
    const std::size_t off = inst.brick_offset(i);
    for (std::size_t r = 0; r < inst.brick_rows(); ++r) {
      LinearRow row;
      row.rhs = inst.b[i - 1][r];
      for (std::size_t c = 0; c < t_b; ++c) {
        if (inst.B(r, c) != 0) row.terms.emplace_back(c, inst.B(r, c));
      }
      for (std::size_t c = 0; c < t_a; ++c) {
        if (inst.A(r, c) != 0) row.terms.emplace_back(off + c, inst.A(r, c));
      }
      ip.rows.push_back(std::move(row));
    }
  }
  return ip;
}

}  // namespace blockip
