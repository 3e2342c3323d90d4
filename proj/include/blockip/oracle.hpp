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

// Ground truth for tests: exhaustive search over the box lattice and
// subset-sum decision procedures.

#ifndef BLOCKIP_ORACLE_HPP_
#define BLOCKIP_ORACLE_HPP_

#include <cstddef>

#include "blockip/bigint.hpp"
#include "blockip/errors.hpp"
#include "blockip/model.hpp"
#include "blockip/reductions.hpp"

namespace blockip {

struct OracleBudget {
  BigInt max_points = 10'000'000;  // cap on the number of lattice points
};

struct OracleResult {
  bool feasible = false;
  Solution solution;        // solver tag is always bruteforce
  std::size_t nodes = 0;    // search nodes actually visited
};

// Exact optimum over the box lattice, visited in odometer order with pruning
// by row activity ranges, forced last variables and the objective bound.
// The odometer runs over the variables sorted by box width (narrowest
// slowest, ties by index). Among equal optima the first in that order is
// returned. Throws BudgetExceeded when prod(u - l + 1) exceeds the
// budget, before searching.
OracleResult enumerate_optimum(const FlatIp& ip, const OracleBudget& budget = {});
OracleResult enumerate_optimum(const FourBlockInstance& instance,
                               const OracleBudget& budget = {});
OracleResult enumerate_optimum(const GeneralizedNFoldInstance& instance,
                               const OracleBudget& budget = {});

// Number of lattice points in the box.
BigInt lattice_size(const IntVector& l, const IntVector& u);

// Is there a subset of betas summing to target? Uses a table when
// target <= 10^6, meet-in-the-middle when there are at most 25 betas, and
// throws BudgetExceeded otherwise. Target 0 is reachable (empty subset).
bool subset_sum_dp(const SubsetSumInstance& s);
// Meet-in-the-middle only; throws BudgetExceeded for more than 40 betas.
bool subset_sum_mitm(const SubsetSumInstance& s);
// Like subset_sum_dp but the subset must have exactly `count` elements.
bool subset_sum_with_count(const SubsetSumInstance& s, std::size_t count);

}  // namespace blockip

#endif  // BLOCKIP_ORACLE_HPP_
