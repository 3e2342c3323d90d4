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

// Solver for 4-block n-fold programs whose brick matrix is a single all-ones
// row. The bricks are relaxed to continuous variables tied together by the
// integral aggregate y = sum_i x^i, the resulting mixed program (integral
// only in x^0 and y) is solved exactly, and the bricks are then recovered as
// an integral transportation solution.

#ifndef BLOCKIP_SOLVER_ONES_HPP_
#define BLOCKIP_SOLVER_ONES_HPP_

#include <optional>

#include "blockip/bigint.hpp"
#include "blockip/errors.hpp"
#include "blockip/model.hpp"
#include "blockip/smallip.hpp"

namespace blockip {

class NotAllOnes : public PreconditionError {
 public:
  NotAllOnes() : PreconditionError("solve_ones: A is not a single all-ones row") {}
};

// Variable layout of the relaxed program: x^0 (t_B, integral), then the n
// bricks (continuous, brick-major), then y (t_A, integral).
struct Mip2Layout {
  std::size_t head = 0;
  std::size_t bricks = 0;
  std::size_t aggregate = 0;
};

Mip2Layout mip2_layout(const FourBlockInstance& instance);

// Throws NotAllOnes unless classify(instance) is AllOnesRow.
MipProblem build_mip2(const FourBlockInstance& instance);

struct OnesContext {
  const FourBlockInstance* instance = nullptr;
  IntVector y;   // aggregate sum_i x^i
  IntVector x0;  // head brick
};

struct RoundedBricks {
  IntMatrix bricks;  // n x t_A
  BigInt objective;  // sum_i w^i . x^i
};

// Integral bricks with row sums b^i - B x^0 and column sums y. Throws
// InternalInconsistency when the transportation polytope is empty.
RoundedBricks round_bricks(const FourBlockInstance& instance,
                           const OnesContext& ctx);

// Fractional optimum of the same transportation polytope, or nullopt when
// it is empty.
std::optional<BigRational> lp3_value(const FourBlockInstance& instance,
                                     const OnesContext& ctx);

struct OnesOptions {
  // Also solve the brick polytope as an exact LP and require its value to
  // match the integral rounding.
  bool audit_lp3 = true;
};

struct OnesReport {
  bool feasible = false;
  Solution solution;
  BigRational mip2_value;
  BigInt flow_objective;              // brick part of the objective
  std::optional<BigRational> lp3;     // set when audited
  MipStats stats;
};

// Throws NotAllOnes on the wrong structure and InternalInconsistency if the
// rounded bricks fail to reproduce the relaxed optimum.
OnesReport solve_ones(const FourBlockInstance& instance,
                      const OnesOptions& options = {});

}  // namespace blockip

#endif  // BLOCKIP_SOLVER_ONES_HPP_
