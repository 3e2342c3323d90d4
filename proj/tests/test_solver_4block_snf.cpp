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
#include "blockip/intlin.hpp"
#include "blockip/solver_4block_snf.hpp"
#include "doctest.h"
#include "support/naive.hpp"

namespace blockip {
namespace {

using testing::ints;

FourBlockInstance pair_instance(long lambda, long mu) {
  FourBlockInstance inst;
  inst.n = 2;
  inst.A = IntMatrix::from_rows({ints({lambda, mu})});
  inst.B = IntMatrix::from_rows({ints({1})});
  inst.C = IntMatrix::from_rows({ints({1})});
  inst.D = IntMatrix::from_rows({ints({1, 0})});
  inst.l = ints({0, 0, 0, 0, 0});
  inst.u = ints({2, 2, 2, 2, 2});
  inst.w = ints({1, 2, -1, 1, 3});
  // Hidden point (1; 1, 2; 2, 0).
  inst.b = {ints({1 + lambda + 2 * mu}), ints({1 + 2 * lambda})};
  inst.b0 = ints({1 + 1 + 2});
  return inst;
}

// Rounded bounds straight from the definition, for xi in [0, |theta| - 1].
std::pair<BigInt, BigInt> direct_bounds(long lo, long hi, long theta, long xi) {
  const BigInt a = BigInt(lo - xi), b = BigInt(hi - xi);
  if (theta > 0) return {ceil_div(a, theta), floor_div(b, theta)};
  return {ceil_div(b, theta), floor_div(a, theta)};
}

TEST_CASE("unit theta gives one sub-interval") {
  const auto s = sub_intervals(ints({-3, 2}), ints({4, 9}), 1);
  REQUIRE(s.size() == 1);
  CHECK(s[0].lo == 0);
  CHECK(s[0].hi == 0);
  const auto t = sub_intervals(ints({-3}), ints({4}), -1);
  REQUIRE(t.size() == 1);
  CHECK(t[0].d[0] == -4);
  CHECK(t[0].d_bar[0] == 3);
}

TEST_CASE("theta 3 with shifted bounds 4 and 7") {
  // Direct evaluation: xi = 0 -> [2, 2], xi = 1 -> [1, 2], xi = 2 -> [1, 1].
  // The upper bound changes between xi = 1 and xi = 2, so all three are
  // separate ranges.
  std::vector<std::pair<BigInt, BigInt>> values;
  for (long xi = 0; xi < 3; ++xi) values.push_back(direct_bounds(4, 7, 3, xi));
  CHECK(values[0] == std::pair<BigInt, BigInt>(2, 2));
  CHECK(values[1] == std::pair<BigInt, BigInt>(1, 2));
  CHECK(values[2] == std::pair<BigInt, BigInt>(1, 1));

  const auto s = sub_intervals(ints({4}), ints({7}), 3);
  REQUIRE(s.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(s[k].lo == static_cast<long>(k));
    CHECK(s[k].hi == static_cast<long>(k));
    CHECK(s[k].d[0] == values[k].first);
    CHECK(s[k].d_bar[0] == values[k].second);
  }
}

TEST_CASE("negative theta mirrors the roles of the bounds") {
  for (long xi = 0; xi < 3; ++xi) {
    const auto [lo, hi] = direct_bounds(4, 7, -3, xi);
    CHECK(rounded_lower(4, 7, -3, xi) == lo);
    CHECK(rounded_upper(4, 7, -3, xi) == hi);
  }
}

TEST_CASE("sub-intervals are maximal constant ranges") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    long theta = rng.small(-9, 9);
    if (theta == 0) theta = 7;
    const std::size_t bricks = 1 + rng.index(3);
    IntVector lo, hi;
    for (std::size_t i = 0; i < bricks; ++i) {
      lo.emplace_back(rng.small(-20, 20));
      hi.emplace_back(lo.back() + rng.small(0, 15));
    }
    const auto s = sub_intervals(lo, hi, theta);
    REQUIRE(!s.empty());
    CHECK(s.front().lo == 0);
    CHECK(s.back().hi == std::abs(theta) - 1);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k > 0) CHECK(s[k].lo == s[k - 1].hi + 1);
      for (BigInt xi = s[k].lo; xi <= s[k].hi; ++xi) {
        for (std::size_t i = 0; i < bricks; ++i) {
          const auto [d, db] = direct_bounds(lo[i].get_si(), hi[i].get_si(), theta, xi.get_si());
          CHECK(s[k].d[i] == d);
          CHECK(s[k].d_bar[i] == db);
        }
      }
      if (k > 0) CHECK((s[k].d != s[k - 1].d || s[k].d_bar != s[k - 1].d_bar));
    }
  }
}

TEST_CASE("Bezout elimination of (1, 1) steps by (1, -1)") {
  const EliminationData e = eliminate_bezout(pair_instance(1, 1));
  CHECK(e.theta == ints({1, -1}));
}

TEST_CASE("elimination offsets solve every brick row") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const FourBlockInstance inst = random_snf_instance(seed);
    const EliminationData e = eliminate_snf(inst);
    CHECK(inst.A * e.theta == IntVector(inst.brick_rows(), 0));
    if (!e.divisible) continue;
    for (std::size_t i = 1; i < inst.n; ++i) {
      const IntVector lhs = inst.A * e.offsets[i];
      for (std::size_t r = 0; r < inst.brick_rows(); ++r) {
        CHECK(lhs[r] == inst.b[i][r] - inst.b[0][r]);
      }
    }
  }
}

TEST_CASE("one brick: cells are bounded by grid times intervals times segments") {
  RandomShape shape;
  shape.max_n = 1;
  shape.max_t_a = 2;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const FourBlockInstance inst = random_pair_instance(seed, shape);
    if (inst.n != 1) continue;
    const EliminationData e = eliminate_snf(inst);
    if (!e.divisible) continue;
    const SubIntervalGrid g = build_grid(inst, e);
    if (g.direct_empty) continue;
    const CellContext ctx = make_cell_context(inst, e, g);
    std::size_t cells = 0;
    enumerate_cells(ctx, [&](const CellProblem& c) {
      ++cells;
      CHECK(c.j == 1);
    });
    CHECK(cells <= 9);
  }
}

TEST_CASE("the best cell equals the reported optimum") {
  FourBlockOptions opt;
  opt.record_cells = true;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const FourBlockInstance inst = random_snf_instance(seed);
    const FourBlockReport r = solve_4block_snf(inst, opt);
    if (!r.feasible) continue;
    bool attained = false;
    for (const auto& v : r.cell_values) {
      if (!v) continue;
      CHECK(*v <= r.solution.objective);
      attained = attained || *v == r.solution.objective;
    }
    CHECK(attained);
  }
}

TEST_CASE("all-zero-width boxes are decided exactly") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomShape shape;
    shape.max_width = 0;
    const FourBlockInstance inst = random_snf_instance(seed, shape);
    const FourBlockReport r = solve_4block_snf(inst);
    const Evaluation ev = evaluate(inst, inst.l);
    CHECK(r.feasible == ev.feasible);
    if (r.feasible) CHECK(r.solution.x == inst.l);
  }
}

TEST_CASE("random SNF-eligible instances agree with lattice enumeration") {
  std::size_t feasible = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    RandomShape shape;
    shape.max_width = 2;
    shape.max_n = 3;
    const FourBlockInstance inst = random_snf_instance(seed, shape);
    if (inst.variable_count() > 9) continue;
    const auto expected = testing::naive_optimum(inst);
    const FourBlockReport r = solve_4block_snf(inst);
    CHECK(r.feasible == expected.has_value());
    if (expected && r.feasible) {
      ++feasible;
      CHECK(r.solution.objective == *expected);
      CHECK(evaluate(inst, r.solution.x).feasible);
    }
  }
  CHECK(feasible > 0);
}

TEST_CASE("Bezout and SNF eliminations reach the same optimum") {
  FourBlockOptions bez;
  bez.method = EliminationMethod::kBezout;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const FourBlockInstance inst = random_pair_instance(seed);
    const FourBlockReport a = solve_4block_snf(inst), b = solve_4block_snf(inst, bez);
    CHECK(a.feasible == b.feasible);
    if (a.feasible && b.feasible) CHECK(a.solution.objective == b.solution.objective);
  }
}

TEST_CASE("threads do not change the answer") {
  FourBlockOptions par;
  par.threads = 3;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FourBlockInstance inst = random_snf_instance(seed);
    const FourBlockReport a = solve_4block_snf(inst), b = solve_4block_snf(inst, par);
    CHECK(a.feasible == b.feasible);
    CHECK(a.solution == b.solution);
  }
}

TEST_CASE("a hand-built pair instance") {
  const FourBlockInstance inst = pair_instance(2, 3);
  const auto expected = testing::naive_optimum(inst);
  REQUIRE(expected.has_value());
  const FourBlockReport r = solve_4block_snf(inst);
  REQUIRE(r.feasible);
  CHECK(r.solution.objective == *expected);
  CHECK(r.solution.solver == SolverTag::kFourBlockSnf);
}

TEST_CASE("A = (1, 1) is eligible and agrees with enumeration") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    FourBlockInstance inst = pair_instance(1, 1);
    for (std::size_t j = 0; j < inst.variable_count(); ++j) {
      inst.l[j] = rng.small(-2, 1);
      inst.u[j] = inst.l[j] + rng.small(0, 2);
      inst.w[j] = rng.small(-5, 5);
    }
    inst.b = {ints({rng.small(-3, 4)}), ints({rng.small(-3, 4)})};
    inst.b0 = ints({rng.small(-3, 3)});
    const auto expected = testing::naive_optimum(inst);
    const FourBlockReport r = solve_4block_snf(inst);
    CHECK(r.feasible == expected.has_value());
    if (expected && r.feasible) CHECK(r.solution.objective == *expected);
  }
}

TEST_CASE("ineligible matrices are refused") {
  FourBlockInstance inst = pair_instance(1, 1);
  inst.A = IntMatrix::from_rows({ints({1, 2}), ints({2, 4})});
  inst.B = IntMatrix::from_rows({ints({1}), ints({1})});
  inst.b = {ints({0, 0}), ints({0, 0})};
  CHECK_THROWS_AS(solve_4block_snf(inst), NotFourBlockEligible);
}

}  // namespace
}  // namespace blockip
