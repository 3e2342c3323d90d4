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

#include "blockip/generators.hpp"
#include "blockip/solver_ones.hpp"
#include "doctest.h"
#include "support/naive.hpp"

namespace blockip {
namespace {

using testing::ints;

// One head variable, two bricks of width 2, A = (1, 1).
FourBlockInstance forced_instance() {
  FourBlockInstance inst;
  inst.n = 1;
  inst.A = IntMatrix::from_rows({ints({1, 1})});
  inst.B = IntMatrix::from_rows({ints({2})});
  inst.C = IntMatrix::from_rows({ints({1})});
  inst.D = IntMatrix::from_rows({ints({1, -1})});
  inst.l = ints({1, 2, 3});
  inst.u = ints({1, 2, 3});
  inst.w = ints({1, 1, 1});
  inst.b0 = ints({1 - 1});
  inst.b = {ints({2 + 5})};
  return inst;
}

TEST_CASE("a box that forces the point returns it") {
  const OnesReport r = solve_ones(forced_instance());
  REQUIRE(r.feasible);
  CHECK(r.solution.x == ints({1, 2, 3}));
  CHECK(r.solution.objective == 6);
  CHECK(r.solution.solver == SolverTag::kOnes);
}

TEST_CASE("the mixed program has t_A + t_B integral variables") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const FourBlockInstance inst = random_ones_instance(seed);
    const MipProblem p = build_mip2(inst);
    std::size_t integral = 0;
    for (bool b : p.integer_mask) integral += b ? 1 : 0;
    CHECK(integral == inst.brick_width() + inst.head_width());
    const Mip2Layout lay = mip2_layout(inst);
    CHECK(lay.bricks == inst.head_width());
    CHECK(lay.aggregate == inst.variable_count());
  }
}

TEST_CASE("without a head only the aggregate is integral") {
  FourBlockInstance inst;
  inst.n = 2;
  inst.A = IntMatrix::from_rows({ints({1, 1, 1})});
  inst.B = IntMatrix(1, 0);
  inst.C = IntMatrix(1, 0);
  inst.D = IntMatrix::from_rows({ints({1, 2, 3})});
  inst.b0 = ints({8});
  inst.b = {ints({2}), ints({2})};
  inst.l.assign(6, 0);
  inst.u.assign(6, 2);
  inst.w = ints({1, 0, 0, 0, 1, 0});
  const MipProblem p = build_mip2(inst);
  REQUIRE(p.integer_mask.size() == 9);
  for (std::size_t j = 0; j < 6; ++j) CHECK_FALSE(p.integer_mask[j]);
  for (std::size_t j = 6; j < 9; ++j) CHECK(p.integer_mask[j]);
  const OnesReport r = solve_ones(inst);
  const auto expected = testing::naive_optimum(inst);
  REQUIRE(expected.has_value());
  CHECK(r.solution.objective == *expected);
}

TEST_CASE("n = 0 reduces to the head with a zero aggregate") {
  FourBlockInstance inst;
  inst.n = 0;
  inst.A = IntMatrix::from_rows({ints({1, 1})});
  inst.B = IntMatrix::from_rows({ints({1})});
  inst.C = IntMatrix::from_rows({ints({2})});
  inst.D = IntMatrix::from_rows({ints({1, 1})});
  inst.b0 = ints({4});
  inst.l = ints({-3});
  inst.u = ints({3});
  inst.w = ints({1});
  const MipProblem p = build_mip2(inst);
  CHECK(p.lp.variable_count() == 3);
  CHECK(p.lp.lower[1] == 0);
  CHECK(p.lp.upper[1] == 0);
  const OnesReport r = solve_ones(inst);
  REQUIRE(r.feasible);
  CHECK(r.solution.x == ints({2}));
}

TEST_CASE("one brick equals the aggregate") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    RandomShape shape;
    shape.max_n = 1;
    const FourBlockInstance inst = random_ones_instance(seed, shape);
    const OnesReport r = solve_ones(inst);
    if (!r.feasible) continue;
    OnesContext ctx{&inst, {}, inst.brick(r.solution.x, 0)};
    ctx.y = inst.brick(r.solution.x, 1);
    const RoundedBricks rb = round_bricks(inst, ctx);
    for (std::size_t h = 0; h < inst.brick_width(); ++h) CHECK(rb.bricks(0, h) == ctx.y[h]);
    break;
  }
}

TEST_CASE("forced bricks round to their bounds") {
  const FourBlockInstance inst = forced_instance();
  OnesContext ctx{&inst, ints({2, 3}), ints({1})};
  const RoundedBricks rb = round_bricks(inst, ctx);
  CHECK(rb.bricks(0, 0) == 2);
  CHECK(rb.bricks(0, 1) == 3);
  CHECK(rb.objective == 5);
}

TEST_CASE("the wrong structure is refused") {
  FourBlockInstance inst = forced_instance();
  inst.A = IntMatrix::from_rows({ints({1, 2})});
  CHECK_THROWS_AS(solve_ones(inst), NotAllOnes);
  CHECK_THROWS_AS(build_mip2(inst), NotAllOnes);
}

TEST_CASE("unreachable brick demands are infeasible") {
  FourBlockInstance inst = forced_instance();
  inst.u = ints({1, 5, 5});
  inst.b = {ints({2 + 11})};
  CHECK_FALSE(testing::naive_optimum(inst).has_value());
  CHECK_FALSE(solve_ones(inst).feasible);
}

TEST_CASE("random instances agree with lattice enumeration") {
  std::size_t feasible = 0, infeasible = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const FourBlockInstance inst = random_ones_instance(seed);
    const auto expected = testing::naive_optimum(inst);
    const OnesReport r = solve_ones(inst);
    CHECK(r.feasible == expected.has_value());
    if (!expected || !r.feasible) {
      ++infeasible;
      continue;
    }
    ++feasible;
    CHECK(r.solution.objective == *expected);
    CHECK(evaluate(inst, r.solution.x).feasible);
    REQUIRE(r.lp3.has_value());
    const BigInt head = dot(inst.brick(inst.w, 0), inst.brick(r.solution.x, 0));
    CHECK(BigRational(r.flow_objective) == *r.lp3);
    CHECK(r.flow_objective + head == r.solution.objective);
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("rounding matches the LP on the same polytope") {
  for (std::uint64_t seed = 500; seed < 560; ++seed) {
    RandomShape shape;
    shape.max_n = 2;
    shape.max_t_a = 2;
    const FourBlockInstance inst = random_ones_instance(seed, shape);
    const OnesReport r = solve_ones(inst, {false});
    if (!r.feasible) continue;
    OnesContext ctx{&inst, IntVector(inst.brick_width(), 0), inst.brick(r.solution.x, 0)};
    for (std::size_t i = 1; i <= inst.n; ++i) {
      const IntVector xi = inst.brick(r.solution.x, i);
      for (std::size_t h = 0; h < xi.size(); ++h) ctx.y[h] += xi[h];
    }
    const auto lp = lp3_value(inst, ctx);
    REQUIRE(lp.has_value());
    CHECK(BigRational(round_bricks(inst, ctx).objective) == *lp);
  }
}

}  // namespace
}  // namespace blockip
