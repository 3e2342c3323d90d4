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
#include <numeric>

#include "blockip/generators.hpp"
#include "blockip/intlin.hpp"
#include "blockip/solver_nfold_snf.hpp"
#include "doctest.h"
#include "support/naive.hpp"

namespace blockip {
namespace {

using testing::ints;

FourBlockInstance two_brick(const IntMatrix& A, const IntVector& b1, const IntVector& b2) {
  FourBlockInstance inst;
  inst.n = 2;
  inst.A = A;
  inst.B = IntMatrix(A.rows(), 0);
  inst.C = IntMatrix(1, 0);
  inst.D = IntMatrix::from_rows({IntVector(A.cols(), 1)});
  inst.b = {b1, b2};
  inst.l.assign(2 * A.cols(), -4);
  inst.u.assign(2 * A.cols(), 4);
  inst.w.assign(2 * A.cols(), 1);
  inst.b0 = ints({0});
  return inst;
}

TEST_CASE("an even-only row with an odd right-hand side fails divisibility") {
  const FourBlockInstance inst =
      two_brick(IntMatrix::from_rows({ints({2, 0})}), ints({3}), ints({2}));
  const NfoldSnfReport r = solve_nfold_snf(inst);
  CHECK_FALSE(r.feasible);
  CHECK(r.reason == NfoldSnfReason::kDivisibilityFail);
}

TEST_CASE("a coprime row never fails divisibility") {
  const FourBlockInstance inst =
      two_brick(IntMatrix::from_rows({ints({2, 3})}), ints({1}), ints({7}));
  CHECK(solve_nfold_snf(inst).reason != NfoldSnfReason::kDivisibilityFail);
}

TEST_CASE("degenerate intervals with a matching aggregate give the unique point") {
  // Every brick pinned: x^i = (1, 1); A = (1, 2) so b^i = 3, D = (1, 1).
  FourBlockInstance inst = two_brick(IntMatrix::from_rows({ints({1, 2})}), ints({3}),
                                     ints({3}));
  inst.l = ints({1, 1, 1, 1});
  inst.u = ints({1, 1, 1, 1});
  inst.b0 = ints({4});
  const NfoldSnfReport r = solve_nfold_snf(inst);
  REQUIRE(r.feasible);
  CHECK(r.solution.x == ints({1, 1, 1, 1}));
  for (const IntInterval& iv : r.context.intervals) CHECK(iv.lo == iv.hi);
}

TEST_CASE("a non-eligible instance is refused") {
  FourBlockInstance inst =
      two_brick(IntMatrix::from_rows({ints({1, 2, 3})}), ints({1}), ints({1}));
  CHECK_THROWS_AS(solve_nfold_snf(inst), NotSnfEligible);
  inst = two_brick(IntMatrix::from_rows({ints({1, 2}), ints({2, 4})}), ints({1, 2}),
                   ints({1, 2}));
  CHECK_THROWS_AS(solve_nfold_snf(inst), NotSnfEligible);
}

TEST_CASE("identity V gives the box itself") {
  const auto r = reduce_box_to_interval(IntMatrix::identity(1), {}, ints({-2}), ints({5}));
  REQUIRE(r.status == IntervalReduction::Status::kOk);
  CHECK(r.interval.lo == -2);
  CHECK(r.interval.hi == 5);
}

TEST_CASE("an upper row with coefficient 2 rounds down") {
  // x = 2 y <= 5 means y <= 2.
  const auto r = reduce_box_to_interval(IntMatrix::from_rows({ints({2})}), {},
                                        ints({-100}), ints({5}));
  REQUIRE(r.status == IntervalReduction::Status::kOk);
  CHECK(r.interval.hi == 2);
}

TEST_CASE("interval reduction matches brute-force membership") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t t = 2 + rng.index(2);
    IntMatrix A(t - 1, t);
    for (std::size_t r = 0; r + 1 < t; ++r) {
      for (std::size_t c = 0; c < t; ++c) A(r, c) = rng.small(-4, 4);
    }
    if (integer_rank(A) != t - 1) continue;
    const IntMatrix V = smith_normal_form(A).V;
    IntVector fixed, l, u;
    for (std::size_t k = 0; k + 1 < t; ++k) fixed.emplace_back(rng.small(-3, 3));
    for (std::size_t h = 0; h < t; ++h) {
      l.emplace_back(rng.small(-15, 5));
      u.emplace_back(l.back() + rng.small(0, 12));
    }
    const auto red = reduce_box_to_interval(V, fixed, l, u);
    for (long y = -20; y <= 20; ++y) {
      IntVector full = fixed;
      full.emplace_back(y);
      const IntVector x = V * full;
      bool inside = true;
      for (std::size_t h = 0; h < t; ++h) inside = inside && l[h] <= x[h] && x[h] <= u[h];
      const bool claimed = red.status == IntervalReduction::Status::kOk &&
                           red.interval.lo <= y && y <= red.interval.hi;
      // The brute-force window is [-20, 20]; membership there must agree.
      CHECK(inside == claimed);
    }
  }
}

TEST_CASE("greedy fill with weights (5, 1), caps (2, 2), target 3") {
  // Every split (a, 3 - a) with 1 <= a <= 2 has value 5a + (3 - a).
  long best = -1, best_a = -1;
  for (long a = 0; a <= 2; ++a) {
    const long b = 3 - a;
    if (b < 0 || b > 2) continue;
    if (5 * a + b > best) best = 5 * a + b, best_a = a;
  }
  REQUIRE(best == 11);
  const IntVector p = greedy_ip8(ints({2, 2}), ints({5, 1}), 3);
  CHECK(p == ints({best_a, 3 - best_a}));
  CHECK(dot(p, ints({5, 1})) == 11);
}

TEST_CASE("equal weights fill in index order") {
  CHECK(greedy_ip8(ints({2, 2, 2}), ints({1, 1, 1}), 3) == ints({2, 1, 0}));
}

TEST_CASE("target equal to the cap total fills everything") {
  CHECK(greedy_ip8(ints({1, 4, 2}), ints({-3, 2, 0}), 7) == ints({1, 4, 2}));
}

TEST_CASE("out-of-range targets are refused") {
  CHECK_THROWS_AS(greedy_ip8(ints({1, 1}), ints({0, 0}), 3), TargetOutOfRange);
  CHECK_THROWS_AS(greedy_ip8(ints({1, 1}), ints({0, 0}), -1), TargetOutOfRange);
}

TEST_CASE("greedy matches enumeration of all splits") {
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng.index(4);
    IntVector caps, weights;
    long total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      caps.emplace_back(rng.small(0, 3));
      total += caps.back().get_si();
      weights.emplace_back(rng.small(-5, 5));
    }
    const long target = rng.small(0, total);
    long best = LONG_MIN;
    std::vector<long> p(k, 0);
    for (;;) {
      long sum = 0, val = 0;
      for (std::size_t i = 0; i < k; ++i) sum += p[i], val += p[i] * weights[i].get_si();
      if (sum == target) best = std::max(best, val);
      std::size_t i = 0;
      while (i < k && p[i] == caps[i].get_si()) p[i] = 0, ++i;
      if (i == k) break;
      ++p[i];
    }
    const IntVector got = greedy_ip8(caps, weights, target);
    CHECK(dot(got, weights) == best);
    BigInt s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(got[i] >= 0);
      CHECK(got[i] <= caps[i]);
      s += got[i];
    }
    CHECK(s == target);
  }
}

TEST_CASE("random eligible instances agree with lattice enumeration") {
  RandomShape shape;
  shape.max_n = 5;
  shape.max_width = 3;
  std::size_t feasible = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const FourBlockInstance inst = random_nfold_snf_instance(seed, shape);
    if (inst.variable_count() > 10) continue;
    const auto expected = testing::naive_optimum(inst);
    const NfoldSnfReport r = solve_nfold_snf(inst);
    CHECK(r.feasible == expected.has_value());
    if (expected && r.feasible) {
      ++feasible;
      CHECK(r.solution.objective == *expected);
      CHECK(evaluate(inst, r.solution.x).feasible);
      CHECK(r.solution.solver == SolverTag::kNfoldSnf);
    }
  }
  CHECK(feasible > 0);
}

TEST_CASE("two runs return the same solution") {
  const FourBlockInstance inst = nfold_linear_instance(500, 3);
  CHECK(solve_nfold_snf(inst).solution == solve_nfold_snf(inst).solution);
}

}  // namespace
}  // namespace blockip
