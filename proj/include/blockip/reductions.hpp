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

// Instance generators that encode subset-sum as (generalized) n-fold
// feasibility problems. Every generated instance has a zero objective.

#ifndef BLOCKIP_REDUCTIONS_HPP_
#define BLOCKIP_REDUCTIONS_HPP_

#include <cstddef>
#include <vector>

#include "blockip/bigint.hpp"
#include "blockip/errors.hpp"
#include "blockip/model.hpp"

namespace blockip {

// Is there a subset of `betas` summing to exactly `target`?
struct SubsetSumInstance {
  IntVector betas;
  BigInt target;
};

class BetaExceedsTarget : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// n-fold program where every block may carry its own diagonal block A_i and
// its own coupling block D_i. Standard solvers take FourBlockInstance and so
// cannot be handed one of these.
struct GeneralizedNFoldInstance {
  std::size_t n = 0;
  std::vector<IntMatrix> A_blocks;  // n blocks, s_A x t_A each
  std::vector<IntMatrix> D_blocks;  // n blocks, s_D x t_A each
  IntVector b0;
  std::vector<IntVector> b;
  IntVector l;
  IntVector u;
  IntVector w;

  std::size_t brick_width() const {
    return A_blocks.empty() ? 0 : A_blocks.front().cols();
  }
  std::size_t variable_count() const { return n * brick_width(); }

  friend bool operator==(const GeneralizedNFoldInstance&,
                         const GeneralizedNFoldInstance&) = default;
};

// Shape and bound problems; empty when well formed.
std::vector<ValidationIssue> validate(const GeneralizedNFoldInstance& instance);
FlatIp flatten(const GeneralizedNFoldInstance& instance);
// True iff x satisfies every row and bound exactly.
bool is_feasible(const GeneralizedNFoldInstance& instance, const IntVector& x);

// A = (1, 1, target), D = (1, 0, 0), b0 = b^i = target and per-brick boxes
// [0, beta_i] x [0, target - beta_i] x [0, 1]. Feasible iff some subset of
// betas sums to target. Throws BetaExceedsTarget when some beta_i > target.
NFoldInstance encode_subset_sum_nfold(const SubsetSumInstance& s);

// Shared block A = (target, 1), per-block coupling D_i = (beta_i, 0),
// boxes [0, 1] x [0, target].
GeneralizedNFoldInstance encode_subset_sum_weighted_coupling(
    const SubsetSumInstance& s);

// Per-block A_i = (1, beta_i), shared coupling D = (1, 0), b^i = beta_i,
// boxes [0, beta_i] x [0, 1].
GeneralizedNFoldInstance encode_subset_sum_varying_blocks(
    const SubsetSumInstance& s);

// Scheduling on n machines with per-machine cardinality limits: target jobs
// of type 1, (n - k - 1) * target jobs of type 2 (unit length) and k jobs of
// type 3 (length target); machine i takes at most beta_i, target - beta_i
// and 1 jobs of the three types. Makespan target is achievable iff the
// encoded program (A = (1, 1, target), D = I_3) is feasible. Throws
// PreconditionError when k > n.
NFoldInstance encode_cardinality_scheduling(const SubsetSumInstance& s,
                                            std::size_t k);

}  // namespace blockip

#endif  // BLOCKIP_REDUCTIONS_HPP_
