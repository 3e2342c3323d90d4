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

// Exact rational linear programming:
//
//   max c.x  s.t.  E x = f,  lower <= x <= upper   (all bounds finite)
//
// Bounded-variable primal simplex with Bland's rule and an artificial
// phase 1 on a dense rational tableau. Pivots skip rows with a zero entry in
// the pivot column, which keeps the block-structured programs built by the
// solvers cheap.

#ifndef BLOCKIP_RATLP_HPP_
#define BLOCKIP_RATLP_HPP_

#include <cstddef>
#include <vector>

#include "blockip/bigint.hpp"
#include "blockip/errors.hpp"

namespace blockip {

struct LpProblem {
  RatVector objective;
  std::vector<RatVector> eq_matrix;  // one entry per row, each of length n
  RatVector eq_rhs;
  RatVector lower;
  RatVector upper;

  std::size_t variable_count() const { return objective.size(); }
  std::size_t row_count() const { return eq_matrix.size(); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  RatVector point;    // set when Optimal
  BigRational value;  // objective at `point`
  std::size_t pivots = 0;
};

class MalformedProblem : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Throws MalformedProblem on inconsistent dimensions or lower > upper.
LpResult solve_lp(const LpProblem& problem);

}  // namespace blockip

#endif  // BLOCKIP_RATLP_HPP_
