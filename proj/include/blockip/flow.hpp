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

// Exact integral min-cost flow (successive shortest paths) and the
// capacitated transportation problem built on it.

#ifndef BLOCKIP_FLOW_HPP_
#define BLOCKIP_FLOW_HPP_

#include <cstddef>
#include <vector>

#include "blockip/bigint.hpp"
#include "blockip/model.hpp"

namespace blockip {

// Directed network with node supplies (positive) and demands (negative).
// Arc costs may be negative as long as no directed cycle has negative cost.
struct FlowNetwork {
  struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    BigInt capacity;
    BigInt cost;
  };

  IntVector supply;
  std::vector<Arc> arcs;

  std::size_t add_node(const BigInt& node_supply = 0);
  std::size_t add_arc(std::size_t from, std::size_t to, const BigInt& capacity,
                       const BigInt& cost);
  std::size_t node_count() const { return supply.size(); }
};

struct FlowResult {
  bool feasible = false;
  IntVector flow;  // per arc
  BigInt cost;
  std::size_t augmentations = 0;
};

// Cheapest integral flow meeting every supply and demand exactly; infeasible
// when supplies do not balance or cannot all be routed. Throws
// PreconditionError on negative capacities or a negative-cost cycle.
FlowResult min_cost_flow(const FlowNetwork& network);

// Integral cells x_{ih} with row sums row_totals[i], column sums
// col_totals[h] and cell_lower <= x <= cell_upper, maximizing
// sum cell_profit * x.
struct TransportProblem {
  IntVector row_totals;
  IntVector col_totals;
  IntMatrix cell_lower;
  IntMatrix cell_upper;
  IntMatrix cell_profit;
};

struct TransportResult {
  bool feasible = false;
  IntMatrix cells;
  BigInt objective;
};

TransportResult solve_transport(const TransportProblem& problem);

}  // namespace blockip

#endif  // BLOCKIP_FLOW_HPP_
