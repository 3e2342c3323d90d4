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

#include "blockip/solver_ones.hpp"

#include "blockip/flow.hpp"
#include "blockip/ratlp.hpp"

namespace blockip {

namespace {

void require_all_ones(const FourBlockInstance& inst) {
  if (classify(inst) != StructureClass::kAllOnesRow) throw NotAllOnes();
}

BigInt as_integer(const BigRational& q) {
  if (!is_integral(q)) {
    throw InternalInconsistency("solve_ones: integral variable has value " +
                                to_decimal(q));
  }
  return q.get_num();
}

// Right-hand side of brick i's single row once x^0 is fixed.
BigInt brick_total(const FourBlockInstance& inst, std::size_t i,
                   const IntVector& x0) {
  BigInt total = inst.b[i][0];
  for (std::size_t k = 0; k < inst.head_width(); ++k) total -= inst.B(0, k) * x0[k];
  return total;
}

TransportProblem lp3_polytope(const FourBlockInstance& inst,
                              const OnesContext& ctx) {
  const std::size_t n = inst.n, t = inst.brick_width();
  TransportProblem p;
  p.col_totals = ctx.y;
  p.cell_lower = IntMatrix(n, t);
  p.cell_upper = IntMatrix(n, t);
  p.cell_profit = IntMatrix(n, t);
  for (std::size_t i = 0; i < n; ++i) {
    p.row_totals.push_back(brick_total(inst, i, ctx.x0));
    const std::size_t off = inst.brick_offset(i + 1);
    for (std::size_t h = 0; h < t; ++h) {
      p.cell_lower(i, h) = inst.l[off + h];
      p.cell_upper(i, h) = inst.u[off + h];
      p.cell_profit(i, h) = inst.w[off + h];
    }
  }
  return p;
}

}  // namespace

Mip2Layout mip2_layout(const FourBlockInstance& inst) {
  Mip2Layout layout;
  layout.head = 0;
  layout.bricks = inst.head_width();
  layout.aggregate = inst.head_width() + inst.n * inst.brick_width();
  return layout;
}

MipProblem build_mip2(const FourBlockInstance& inst) {
  require_all_ones(inst);
  const std::size_t n = inst.n, t = inst.brick_width(), tb = inst.head_width();
  const Mip2Layout layout = mip2_layout(inst);

  MipBuilder mb;
  for (std::size_t k = 0; k < tb; ++k) mb.add_var(inst.l[k], inst.u[k], true);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t off = inst.brick_offset(i);
    for (std::size_t h = 0; h < t; ++h) {
      mb.add_var(inst.l[off + h], inst.u[off + h], false);
    }
  }
  for (std::size_t h = 0; h < t; ++h) {
    BigInt lo = 0, hi = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      lo += inst.l[inst.brick_offset(i) + h];
      hi += inst.u[inst.brick_offset(i) + h];
    }
    mb.add_var(lo, hi, true);
  }

  LinExpr objective;
  for (std::size_t v = 0; v < inst.variable_count(); ++v) objective.add(v, inst.w[v]);
  mb.maximize(objective);

  // sum_i x^i = y
  for (std::size_t h = 0; h < t; ++h) {
    LinExpr row;
    for (std::size_t i = 0; i < n; ++i) row.add(layout.bricks + i * t + h, 1);
    mb.add_eq(row, LinExpr::var(layout.aggregate + h));
  }
  // C x^0 + D y = b^0
  for (std::size_t r = 0; r < inst.global_rows(); ++r) {
    LinExpr row;
    for (std::size_t k = 0; k < tb; ++k) row.add(layout.head + k, inst.C(r, k));
    for (std::size_t h = 0; h < t; ++h) row.add(layout.aggregate + h, inst.D(r, h));
    mb.add_eq(row, BigRational(inst.b0[r]));
  }
  // B x^0 + (1, ..., 1) x^i = b^i
  for (std::size_t i = 0; i < n; ++i) {
    LinExpr row;
    for (std::size_t k = 0; k < tb; ++k) row.add(layout.head + k, inst.B(0, k));
    for (std::size_t h = 0; h < t; ++h) row.add(layout.bricks + i * t + h, 1);
    mb.add_eq(row, BigRational(inst.b[i][0]));
  }
  return mb.build();
}

RoundedBricks round_bricks(const FourBlockInstance& inst,
                           const OnesContext& ctx) {
  const TransportResult tr = solve_transport(lp3_polytope(inst, ctx));
  if (!tr.feasible) {
    throw InternalInconsistency(
        "round_bricks: brick polytope is empty although the relaxation is "
        "feasible");
  }
  return {tr.cells, tr.objective};
}

std::optional<BigRational> lp3_value(const FourBlockInstance& inst,
                                     const OnesContext& ctx) {
  const std::size_t n = inst.n, t = inst.brick_width();
  const TransportProblem tp = lp3_polytope(inst, ctx);
  LpProblem lp;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t h = 0; h < t; ++h) {
      lp.objective.emplace_back(tp.cell_profit(i, h));
      lp.lower.emplace_back(tp.cell_lower(i, h));
      lp.upper.emplace_back(tp.cell_upper(i, h));
    }
  }
  for (std::size_t h = 0; h < t; ++h) {
    RatVector row(n * t);
    for (std::size_t i = 0; i < n; ++i) row[i * t + h] = 1;
    lp.eq_matrix.push_back(std::move(row));
    lp.eq_rhs.emplace_back(tp.col_totals[h]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(n * t);
    for (std::size_t h = 0; h < t; ++h) row[i * t + h] = 1;
    lp.eq_matrix.push_back(std::move(row));
    lp.eq_rhs.emplace_back(tp.row_totals[i]);
  }
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  return r.value;
}

OnesReport solve_ones(const FourBlockInstance& inst, const OnesOptions& options) {
  const MipProblem mip = build_mip2(inst);
  OnesReport report;
  const LpResult r = solve_mip(mip, {}, &report.stats);
  if (r.status != LpStatus::kOptimal) return report;

  const std::size_t n = inst.n, t = inst.brick_width(), tb = inst.head_width();
  const Mip2Layout layout = mip2_layout(inst);
  OnesContext ctx{&inst, {}, {}};
  for (std::size_t k = 0; k < tb; ++k) ctx.x0.push_back(as_integer(r.point[layout.head + k]));
  for (std::size_t h = 0; h < t; ++h) {
    ctx.y.push_back(as_integer(r.point[layout.aggregate + h]));
  }
  report.mip2_value = r.value;

  BigRational brick_part = 0;
  for (std::size_t v = layout.bricks; v < layout.aggregate; ++v) {
    brick_part += r.point[v] * inst.w[v];
  }
  const RoundedBricks rounded = round_bricks(inst, ctx);
  report.flow_objective = rounded.objective;
  if (BigRational(rounded.objective) != brick_part) {
    throw InternalInconsistency(
        "solve_ones: rounded bricks reach " + to_decimal(rounded.objective) +
        " but the relaxation reaches " + to_decimal(brick_part));
  }
  if (options.audit_lp3) {
    report.lp3 = lp3_value(inst, ctx);
    if (!report.lp3 || *report.lp3 != brick_part) {
      throw InternalInconsistency("solve_ones: brick LP optimum differs from "
                                  "the integral rounding");
    }
  }

  IntVector x = ctx.x0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t h = 0; h < t; ++h) x.push_back(rounded.bricks(i, h));
  }
  const Evaluation ev = evaluate(inst, x);
  if (!ev.feasible || BigRational(ev.objective) != r.value) {
    throw InternalInconsistency("solve_ones: assembled solution does not "
                                "reproduce the relaxed optimum");
  }
  report.feasible = true;
  report.solution = Solution{std::move(x), ev.objective, SolverTag::kOnes};
  return report;
}

}  // namespace blockip
