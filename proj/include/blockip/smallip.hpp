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

// Exact mixed-integer programming for programs with few integer variables:
// best-bound branch-and-bound over exact rational LP relaxations.

#ifndef BLOCKIP_SMALLIP_HPP_
#define BLOCKIP_SMALLIP_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "blockip/bigint.hpp"
#include "blockip/ratlp.hpp"

namespace blockip {

struct MipProblem {
  LpProblem lp;
  std::vector<bool> integer_mask;
};

struct MipOptions {
  // Only solutions with value strictly above this are of interest; nodes
  // that cannot beat it are pruned and the result is Infeasible if none do.
  std::optional<BigRational> cutoff;
};

struct MipStats {
  std::size_t nodes = 0;
  std::size_t lp_pivots = 0;
};

// Throws MalformedProblem on inconsistent dimensions or lower > upper.
LpResult solve_mip(const MipProblem& problem, const MipOptions& options = {},
                   MipStats* stats = nullptr);

// Affine expression sum(coef * var) + constant.
struct LinExpr {
  std::vector<std::pair<std::size_t, BigRational>> terms;
  BigRational constant;

  LinExpr() = default;
  LinExpr(const BigRational& c) : constant(c) {}  // NOLINT: implicit constant

  static LinExpr var(std::size_t v, const BigRational& coef = 1);

  LinExpr& add(std::size_t v, const BigRational& coef);
  LinExpr& operator+=(const LinExpr& other);
  LinExpr& operator-=(const LinExpr& other);
  LinExpr& operator*=(const BigRational& factor);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, const BigRational& f) { return a *= f; }
  friend LinExpr operator*(const BigRational& f, LinExpr a) { return a *= f; }
};

// Incremental construction of a maximization MipProblem. Inequalities get a
// bounded slack; those decided by the variable box alone are dropped or mark
// the program infeasible.
class MipBuilder {
 public:
  std::size_t add_var(const BigRational& lower, const BigRational& upper,
                      bool integer);
  void add_eq(const LinExpr& lhs, const LinExpr& rhs);
  void add_le(const LinExpr& lhs, const LinExpr& rhs);
  void add_ge(const LinExpr& lhs, const LinExpr& rhs) { add_le(rhs, lhs); }
  void maximize(const LinExpr& objective);

  // Range of `e` over the variable box.
  std::pair<BigRational, BigRational> range(const LinExpr& e) const;

  // Set when some constraint is violated by every point of the box.
  bool infeasible() const { return infeasible_; }
  const BigRational& objective_offset() const { return offset_; }
  std::size_t variable_count() const { return lower_.size(); }

  MipProblem build() const;

 private:
  RatVector lower_;
  RatVector upper_;
  std::vector<bool> integer_;
  RatVector objective_;
  std::vector<LinExpr> rows_;  // each row reads expr = 0
  BigRational offset_;
  bool infeasible_ = false;
};

}  // namespace blockip

#endif  // BLOCKIP_SMALLIP_HPP_
