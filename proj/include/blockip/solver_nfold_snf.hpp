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

// n-fold solver for brick matrices A with t_A = s_A + 1 columns and full
// row rank. With U A V = S in Smith form and x^i = V y^i, the brick rows fix
// the first s_A components of every y^i, so each brick keeps a single free
// integer y^i_{t_A} confined to an interval. The coupling rows then pin the
// sum of these free values and the program collapses to a knapsack with
// unit weights that is solved greedily.

#ifndef BLOCKIP_SOLVER_NFOLD_SNF_HPP_
#define BLOCKIP_SOLVER_NFOLD_SNF_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "blockip/bigint.hpp"
#include "blockip/errors.hpp"
#include "blockip/intlin.hpp"
#include "blockip/model.hpp"

namespace blockip {

enum class NfoldSnfReason {
  kNone,
  kDivisibilityFail,       // some alpha_j does not divide (U b^i)_j
  kAggregateInconsistent,  // coupling rows disagree on the aggregate
  kEmptyInterval,          // some brick has no admissible free value
  kAggregateOutOfRange,    // the aggregate misses [sum lo, sum hi]
};

std::string_view to_string(NfoldSnfReason reason);

class NotSnfEligible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class TargetOutOfRange : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct IntInterval {
  BigInt lo;
  BigInt hi;
};

struct IntervalReduction {
  enum class Status { kOk, kEmpty, kConstantRowViolated };
  Status status = Status::kOk;
  IntInterval interval;  // meaningful when kOk
};

// All integers y with l <= V (fixed_y, y) <= u. `fixed_y` holds the first
// V.cols() - 1 components. Rows where the last column of V vanishes are
// checked as constants. When every such coefficient is zero the interval
// is unconstrained, which cannot happen for unimodular V.
IntervalReduction reduce_box_to_interval(const IntMatrix& V,
                                         const IntVector& fixed_y,
                                         const IntVector& l,
                                         const IntVector& u);

// Maximizes sum weights[i] * p[i] subject to sum p = target and
// 0 <= p[i] <= caps[i]: the largest weights are filled first, equal weights
// in index order. Throws TargetOutOfRange unless 0 <= target <= sum caps.
IntVector greedy_ip8(const IntVector& caps, const IntVector& weights,
                     const BigInt& target);

struct NfoldSnfContext {
  SnfDecomposition snf;
  std::vector<IntVector> fixed_y;     // per brick, length s_A
  std::optional<BigInt> d0;           // sum of free values; unset if free
  std::vector<IntInterval> intervals; // per brick
  IntVector reduced_weights;          // w^i . (last column of V)
  BigInt c0;                          // objective constant
};

struct NfoldSnfReport {
  bool feasible = false;
  NfoldSnfReason reason = NfoldSnfReason::kNone;
  Solution solution;
  NfoldSnfContext context;
};

// Throws NotSnfEligible unless B = C = 0, t_A = s_A + 1 and A has full row
// rank (an all-ones 1 x 2 row qualifies), and
// InternalInconsistency if the reconstructed point fails evaluation.
NfoldSnfReport solve_nfold_snf(const FourBlockInstance& instance);

}  // namespace blockip

#endif  // BLOCKIP_SOLVER_NFOLD_SNF_HPP_
