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

#include <algorithm>

#include "blockip/generators.hpp"
#include "blockip/oracle.hpp"
#include "blockip/reductions.hpp"
#include "doctest.h"
#include "support/naive.hpp"

namespace blockip {
namespace {

using testing::ints;

std::vector<long> as_longs(const IntVector& v) {
  std::vector<long> out;
  for (const BigInt& b : v) out.push_back(b.get_si());
  return out;
}

FourBlockInstance permute_bricks(const FourBlockInstance& inst,
                                 const std::vector<std::size_t>& perm) {
  FourBlockInstance out = inst;
  const std::size_t tb = inst.head_width(), ta = inst.brick_width();
  for (std::size_t i = 0; i < inst.n; ++i) {
    out.b[i] = inst.b[perm[i]];
    for (std::size_t h = 0; h < ta; ++h) {
      out.l[tb + i * ta + h] = inst.l[tb + perm[i] * ta + h];
      out.u[tb + i * ta + h] = inst.u[tb + perm[i] * ta + h];
      out.w[tb + i * ta + h] = inst.w[tb + perm[i] * ta + h];
    }
  }
  return out;
}

TEST_CASE("a width-0 box checks its single point") {
  FlatIp ip;
  ip.l = ints({2, -1});
  ip.u = ints({2, -1});
  ip.w = ints({1, 1});
  ip.rows = {{{{0, 1}, {1, 1}}, 1}};
  const OracleResult r = enumerate_optimum(ip);
  CHECK(r.feasible);
  CHECK(r.solution.objective == 1);
  ip.rows[0].rhs = 2;
  CHECK_FALSE(enumerate_optimum(ip).feasible);
}

TEST_CASE("three binaries with one equality match hand enumeration") {
  // x0 + x1 + x2 = 2, maximize 3 x0 + x1 + 2 x2: the eight points give
  // (1,1,0)=4, (1,0,1)=5, (0,1,1)=3.
  FlatIp ip;
  ip.l = ints({0, 0, 0});
  ip.u = ints({1, 1, 1});
  ip.w = ints({3, 1, 2});
  ip.rows = {{{{0, 1}, {1, 1}, {2, 1}}, 2}};
  const OracleResult r = enumerate_optimum(ip);
  CHECK(r.feasible);
  CHECK(r.solution.objective == 5);
  CHECK(r.solution.x == ints({1, 0, 1}));
  CHECK(r.solution.solver == SolverTag::kBruteforce);
}

TEST_CASE("budget is checked before the search") {
  FlatIp ip;
  ip.l = ints({0, 0});
  ip.u = ints({99, 99});
  ip.w = ints({0, 0});
  CHECK_THROWS_AS(enumerate_optimum(ip, {BigInt(9999)}), BudgetExceeded);
  CHECK_NOTHROW(enumerate_optimum(ip, {BigInt(10000)}));
  CHECK_THROWS_AS(enumerate_optimum(ip, {BigInt(0)}), PreconditionError);
  CHECK(lattice_size(ip.l, ip.u) == 10000);
}

TEST_CASE("oracle matches the plain odometer on random instances") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const FourBlockInstance inst =
        seed % 2 ? random_snf_instance(seed) : random_ones_instance(seed);
    if (lattice_size(inst.l, inst.u) > 200'000) continue;
    const auto expected = testing::naive_optimum(inst);
    const OracleResult r = enumerate_optimum(inst);
    CHECK(r.feasible == expected.has_value());
    if (expected && r.feasible) {
      CHECK(r.solution.objective == *expected);
      CHECK(evaluate(inst, r.solution.x).feasible);
    }
  }
}

TEST_CASE("permuting bricks keeps the optimum") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const FourBlockInstance inst = random_snf_instance(seed);
    std::vector<std::size_t> perm(inst.n);
    for (std::size_t i = 0; i < inst.n; ++i) perm[i] = inst.n - 1 - i;
    const OracleResult a = enumerate_optimum(inst, {BigInt(50'000'000)});
    const OracleResult b = enumerate_optimum(permute_bricks(inst, perm), {BigInt(50'000'000)});
    CHECK(a.feasible == b.feasible);
    if (a.feasible && b.feasible) CHECK(a.solution.objective == b.solution.objective);
  }
}

TEST_CASE("n-fold subset-sum instances agree with subset-sum DP") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const SubsetSumInstance s = random_subset_sum(seed, 1 + seed % 8, 12);
    const auto inst = encode_subset_sum_nfold(s);
    CHECK(enumerate_optimum(inst.general(), {pow10(60)}).feasible ==
          subset_sum_dp(s));
  }
}

TEST_CASE("subset-sum DP examples") {
  CHECK(subset_sum_dp({ints({3, 5, 8}), 8}));
  CHECK(testing::naive_subset_sum({3, 5, 8}, 8));
  CHECK_FALSE(subset_sum_dp({ints({2, 4, 6}), 5}));
  CHECK(subset_sum_dp({ints({2, 4, 6}), 0}));
}

TEST_CASE("DP, meet-in-the-middle and listing agree") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    SubsetSumInstance s;
    const std::size_t n = 1 + rng.index(12);
    for (std::size_t i = 0; i < n; ++i) s.betas.emplace_back(rng.small(1, 40));
    s.target = rng.small(1, 150);
    const bool expected = testing::naive_subset_sum(as_longs(s.betas), s.target.get_si());
    CHECK(subset_sum_dp(s) == expected);
    CHECK(subset_sum_mitm(s) == expected);
    const std::size_t k = rng.index(n + 1);
    CHECK(subset_sum_with_count(s, k) ==
          testing::naive_subset_sum(as_longs(s.betas), s.target.get_si(), k));
  }
}

TEST_CASE("large targets fall back to meet-in-the-middle") {
  SubsetSumInstance s{{pow10(20), pow10(20) + 1, 7}, pow10(20) + 8};
  CHECK(subset_sum_dp(s));
  s.target += 1;
  CHECK_FALSE(subset_sum_dp(s));
  SubsetSumInstance big;
  for (int i = 0; i < 30; ++i) big.betas.push_back(pow10(12) + i);
  big.target = pow10(13);
  CHECK_THROWS_AS(subset_sum_dp(big), BudgetExceeded);
}

}  // namespace
}  // namespace blockip
