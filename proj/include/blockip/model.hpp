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

// Problem and solution model for 4-block n-fold integer programs
//
//   max { w.x : H x = b, l <= x <= u, x integral }
//
// with
//
//       | C D D ... D |
//       | B A 0 ... 0 |
//   H = | B 0 A ... 0 |
//       | :       .   |
//       | B 0 0 ... A |
//
// Variables are stored brick-major: the head brick x^0 (width t_B) first,
// followed by the n repeated bricks x^1..x^n (width t_A each).

#ifndef BLOCKIP_MODEL_HPP_
#define BLOCKIP_MODEL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockip/bigint.hpp"

namespace blockip {

// Dense row-major integer matrix. Zero rows or zero columns are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  // `cols` is only consulted when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols = 0);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }
  bool is_zero() const;

  BigInt& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;

  // Largest absolute entry; 0 for an empty matrix.
  BigInt max_abs() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector entries_;
};

struct FourBlockInstance {
  std::size_t n = 0;
  IntMatrix A;  // s_A x t_A, repeated on the diagonal
  IntMatrix B;  // s_A x t_B, repeated in the first block column
  IntMatrix C;  // s_D x t_B, top-left corner
  IntMatrix D;  // s_D x t_A, repeated in the first block row
  IntVector b0;              // length s_D
  std::vector<IntVector> b;  // n vectors of length s_A
  IntVector l;
  IntVector u;
  IntVector w;

  std::size_t brick_rows() const { return A.rows(); }
  std::size_t brick_width() const { return A.cols(); }
  std::size_t head_width() const { return B.cols(); }
  std::size_t global_rows() const { return D.rows(); }
  std::size_t variable_count() const { return head_width() + n * brick_width(); }
  std::size_t constraint_count() const {
    return global_rows() + n * brick_rows();
  }

  // First variable index of brick i (0 = head brick).
  std::size_t brick_offset(std::size_t i) const {
    return i == 0 ? 0 : head_width() + (i - 1) * brick_width();
  }
  std::size_t brick_size(std::size_t i) const {
    return i == 0 ? head_width() : brick_width();
  }
  IntVector brick(const IntVector& v, std::size_t i) const;

  // True when B and C vanish, i.e. the program is a plain n-fold IP.
  bool is_nfold() const { return B.is_zero() && C.is_zero(); }

  friend bool operator==(const FourBlockInstance&,
                         const FourBlockInstance&) = default;
};

// A FourBlockInstance whose B and C blocks are zero. The head brick is
// normally empty (t_B = 0); when it is not, its variables are uncoupled.
class NFoldInstance {
 public:
  // Throws PreconditionError when B or C is nonzero.
  explicit NFoldInstance(FourBlockInstance instance);
  NFoldInstance(std::size_t n, IntMatrix A, IntMatrix D, IntVector b0,
                std::vector<IntVector> b, IntVector l, IntVector u,
                IntVector w);

  static std::optional<NFoldInstance> from(const FourBlockInstance& instance);

  const FourBlockInstance& general() const { return instance_; }
  operator const FourBlockInstance&() const { return instance_; }

 private:
  FourBlockInstance instance_;
};

enum class SolverTag { kOnes, kNfoldSnf, kFourBlockSnf, kBruteforce };

std::string_view to_string(SolverTag tag);
std::optional<SolverTag> parse_solver_tag(std::string_view text);

struct Solution {
  IntVector x;
  BigInt objective;
  SolverTag solver = SolverTag::kBruteforce;

  friend bool operator==(const Solution&, const Solution&) = default;
};

enum class StructureClass {
  kAllOnesRow,
  kSnfEligible,
  kNFoldSnfEligible,
  kHardTaGeSaPlus2,
  kGeneral,
};

std::string_view to_string(StructureClass tag);

enum class ValidationCode { kShapeMismatch, kInfiniteBound, kLowerExceedsUpper };

std::string_view to_string(ValidationCode code);

struct ValidationIssue {
  ValidationCode code;
  std::string message;
};

// Every violated shape/bound invariant; empty iff the instance is well formed.
std::vector<ValidationIssue> validate(const FourBlockInstance& instance);

// Routing class, first match in the order
// AllOnesRow > SnfEligible / NFoldSnfEligible > Hard_tA_ge_sA_plus_2 > General.
StructureClass classify(const FourBlockInstance& instance);

struct Violation {
  enum class Kind { kGlobalRow, kBrickRow, kLowerBound, kUpperBound };
  Kind kind;
  std::size_t brick = 0;  // brick index for kBrickRow and bound kinds
  std::size_t index = 0;  // row within the block, or coordinate in the brick
  BigInt lhs;             // row activity or variable value
  BigInt rhs;             // right-hand side or violated bound

  std::string describe() const;
};

struct Evaluation {
  bool feasible = false;
  BigInt objective;
  std::vector<Violation> violations;
};

// Exact feasibility check of x against H x = b and the box. Throws
// DimensionMismatch when x does not have variable_count() entries.
Evaluation evaluate(const FourBlockInstance& instance, const IntVector& x);

// Sparse equality row sum(coef * x[var]) = rhs.
struct LinearRow {
  std::vector<std::pair<std::size_t, BigInt>> terms;
  BigInt rhs;
};

// Structure-free view of an integer program: rows, box and objective.
struct FlatIp {
  std::vector<LinearRow> rows;
  IntVector l;
  IntVector u;
  IntVector w;
};

FlatIp flatten(const FourBlockInstance& instance);

}  // namespace blockip

#endif  // BLOCKIP_MODEL_HPP_
