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

// 4-block solver for brick matrices A with t_A = s_A + 1 columns and full
// row rank.
//
// Every brick differs from brick 1 by a particular offset plus a multiple of
// the kernel generator theta of A:
//
//   x^i = x^1 + offset^i + theta * y_i,     y_1 = 0.
//
// Coordinates of x^1 with theta_h != 0 are split as x^1_h = xi_h +
// theta_h * z_h with 0 <= xi_h < |theta_h|. The box of brick i then reads
// d^i_h(xi_h) <= y_i + z_h <= dbar^i_h(xi_h), where the rounded bounds are
// constant on a few "sub-intervals" of xi_h. Fixing one sub-interval per
// coordinate, one interval per pairwise difference z_a - z_b (which fixes
// the binding bounds of every brick) and one segment j of the merged
// variable p = sum_{i>=2} (y_i - lower_i(z)) yields a mixed program in
// O(t_A + t_B) integer variables. The optimum is the best cell.

#ifndef BLOCKIP_SOLVER_4BLOCK_SNF_HPP_
#define BLOCKIP_SOLVER_4BLOCK_SNF_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "blockip/bigint.hpp"
#include "blockip/errors.hpp"
#include "blockip/intlin.hpp"
#include "blockip/model.hpp"
#include "blockip/smallip.hpp"

namespace blockip {

class LiftInconsistency : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

enum class EliminationMethod { kSnf, kBezout };

struct EliminationData {
  EliminationMethod method = EliminationMethod::kSnf;
  bool divisible = true;            // false: some brick has no offset
  IntVector theta;                  // kernel generator of A
  std::vector<IntVector> offsets;   // per brick (offsets[0] = 0)
  IntVector offset_sum;
  std::optional<SnfDecomposition> snf;
};

// Offsets from U (b^i - b^1) and the last column of V.
EliminationData eliminate_snf(const FourBlockInstance& instance);
// Offsets from extended gcd; only for a 1 x 2 brick matrix (lambda, mu),
// giving theta = (mu / g, -lambda / g).
EliminationData eliminate_bezout(const FourBlockInstance& instance);

struct SubInterval {
  BigInt lo;
  BigInt hi;
  IntVector d;      // per brick, lower rounded bound
  IntVector d_bar;  // per brick, upper rounded bound
};

struct SubIntervalGrid {
  std::vector<std::size_t> coords;             // coordinates with theta != 0
  std::vector<std::vector<SubInterval>> cells; // per entry of coords
  // Coordinates with theta == 0 are pinned by direct bounds on x^1_h.
  std::vector<std::optional<std::pair<BigInt, BigInt>>> direct;
  bool direct_empty = false;
};

// Rounded bounds d^i_h(xi), dbar^i_h(xi) for one coordinate with theta_h
// != 0, evaluated directly.
BigInt rounded_lower(const BigInt& lo, const BigInt& hi, const BigInt& theta,
                     const BigInt& xi);
BigInt rounded_upper(const BigInt& lo, const BigInt& hi, const BigInt& theta,
                     const BigInt& xi);

// Maximal ranges of xi_h in [0, |theta_h| - 1] on which every rounded bound
// is constant, for the shifted bounds lo[i] <= x_h <= hi[i].
std::vector<SubInterval> sub_intervals(const IntVector& lo, const IntVector& hi,
                                       const BigInt& theta);

SubIntervalGrid build_grid(const FourBlockInstance& instance,
                           const EliminationData& elim);

// Interval of z_{coords[a]} - z_{coords[b]} for positions a < b.
struct PairInterval {
  std::size_t a = 0;
  std::size_t b = 0;
  BigInt lo;
  BigInt hi;
};

struct CellProblem {
  std::vector<std::size_t> xi_choice;  // sub-interval index per position
  std::vector<PairInterval> pairs;
  std::vector<std::size_t> lower_arg;  // per brick (index 0 unused)
  std::vector<std::size_t> upper_arg;
  std::size_t j = 1;                   // merge segment, 1..n
};

// Shared read-only state for enumerating and solving cells.
struct CellContext {
  const FourBlockInstance* instance = nullptr;
  const EliminationData* elim = nullptr;
  const SubIntervalGrid* grid = nullptr;
  IntVector v;                     // per brick, w^i . theta
  std::vector<std::size_t> order;  // bricks 2..n (0-based 1..n-1) by v desc
};

CellContext make_cell_context(const FourBlockInstance& instance,
                              const EliminationData& elim,
                              const SubIntervalGrid& grid);

// Calls `visit` for every cell that survives interval pruning, in a fixed
// order.
void enumerate_cells(const CellContext& ctx,
                     const std::function<void(const CellProblem&)>& visit);

struct CellSolution {
  bool feasible = false;
  BigInt value;       // objective of the original program
  RatVector point;    // cell program variables
  MipStats stats;
};

CellSolution solve_cell(const CellContext& ctx, const CellProblem& cell,
                        const std::optional<BigInt>& must_reach = std::nullopt);

// Splits p over the bricks, rebuilds every brick and checks the result.
// Throws LiftInconsistency when the lifted point is infeasible or its
// objective differs from the cell value.
Solution lift_solution(const CellContext& ctx, const CellProblem& cell,
                       const CellSolution& solved);

struct FourBlockOptions {
  EliminationMethod method = EliminationMethod::kSnf;
  std::size_t threads = 1;
  bool record_cells = false;  // keep every cell value (disables pruning)
};

struct FourBlockReport {
  bool feasible = false;
  std::string reason;
  Solution solution;
  std::size_t cells = 0;
  std::size_t feasible_cells = 0;
  std::size_t mip_nodes = 0;
  std::vector<std::optional<BigInt>> cell_values;  // when recorded
};

// Needs t_A = s_A + 1 and full row rank (so A = (1, 1) is accepted even
// though it routes elsewhere); throws NotFourBlockEligible otherwise.
FourBlockReport solve_4block_snf(const FourBlockInstance& instance,
                                 const FourBlockOptions& options = {});

class NotFourBlockEligible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace blockip

#endif  // BLOCKIP_SOLVER_4BLOCK_SNF_HPP_
