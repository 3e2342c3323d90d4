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

#include "blockip/solver_4block_snf.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace blockip {

namespace {

IntVector brick_slice(const FourBlockInstance& inst, const IntVector& v,
                      std::size_t i) {
  const std::size_t off = inst.brick_offset(i + 1);
  return IntVector(v.begin() + off, v.begin() + off + inst.brick_width());
}

BigInt to_integer(const BigRational& q, const char* what) {
  if (!is_integral(q)) {
    throw LiftInconsistency(std::string("lift_solution: ") + what +
                            " is not integral");
  }
  return q.get_num();
}

// Range of z_{coords[a]} - z_{coords[b]} implied by the pair intervals.
std::pair<BigInt, BigInt> diff_range(const std::vector<PairInterval>& pairs,
                                     std::size_t k, std::size_t a,
                                     std::size_t b) {
  if (a == b) return {0, 0};
  const std::size_t lo = std::min(a, b), hi = std::max(a, b);
  // Pairs are stored lexicographically: (0,1), (0,2), ..., (1,2), ...
  const std::size_t index = lo * k - lo * (lo + 1) / 2 + (hi - lo - 1);
  const PairInterval& p = pairs[index];
  if (a < b) return {p.lo, p.hi};
  return {-p.hi, -p.lo};
}

const SubInterval& chosen(const CellContext& ctx, const CellProblem& cell,
                          std::size_t a) {
  return ctx.grid->cells[a][cell.xi_choice[a]];
}

// Variable indices inside a cell program.
struct CellLayout {
  std::size_t head = 0;
  std::size_t split = 0;   // xi_a at split + 2a, z_a at split + 2a + 1
  std::size_t direct = 0;  // free x^1_h for theta_h == 0, in h order
  std::size_t p = 0;
};

struct CellModel {
  MipBuilder mb;
  CellLayout layout;
  std::vector<LinExpr> x1;     // per coordinate
  std::vector<LinExpr> lower;  // per brick, y_i lower bound in z
  std::vector<LinExpr> cap;    // per brick
};

CellModel build_cell_model(const CellContext& ctx, const CellProblem& cell) {
  const FourBlockInstance& inst = *ctx.instance;
  const EliminationData& elim = *ctx.elim;
  const SubIntervalGrid& grid = *ctx.grid;
  const std::size_t n = inst.n, t = inst.brick_width(), tb = inst.head_width();
  const std::size_t k = grid.coords.size();

  CellModel m;
  MipBuilder& mb = m.mb;
  m.layout.head = 0;
  for (std::size_t c = 0; c < tb; ++c) mb.add_var(inst.l[c], inst.u[c], true);
  m.layout.split = mb.variable_count();
  for (std::size_t a = 0; a < k; ++a) {
    const SubInterval& s = chosen(ctx, cell, a);
    mb.add_var(s.lo, s.hi, true);
    mb.add_var(s.d[0], s.d_bar[0], true);
  }
  m.layout.direct = mb.variable_count();
  m.x1.resize(t);
  for (std::size_t h = 0; h < t; ++h) {
    if (!grid.direct[h]) continue;
    m.x1[h] = LinExpr::var(mb.add_var(grid.direct[h]->first,
                                      grid.direct[h]->second, true));
  }
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t h = grid.coords[a];
    m.x1[h] = LinExpr::var(m.layout.split + 2 * a);
    m.x1[h].add(m.layout.split + 2 * a + 1, elim.theta[h]);
  }
  auto z = [&](std::size_t a) { return LinExpr::var(m.layout.split + 2 * a + 1); };

  m.lower.resize(n);
  m.cap.resize(n);
  std::map<std::pair<std::size_t, std::size_t>, BigInt> cap_bounds;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t L = cell.lower_arg[i], U = cell.upper_arg[i];
    const BigInt& d = chosen(ctx, cell, L).d[i];
    const BigInt& db = chosen(ctx, cell, U).d_bar[i];
    m.lower[i] = LinExpr(BigRational(d)) - z(L);
    m.cap[i] = LinExpr(BigRational(db - d)) - z(U) + z(L);
    if (L != U) {
      auto [it, inserted] = cap_bounds.emplace(std::make_pair(L, U), db - d);
      if (!inserted && db - d < it->second) it->second = db - d;
    }
  }

  // Lambda(j) = sum of the first j - 1 caps in merge order.
  std::vector<LinExpr> lambda(n + 1);
  for (std::size_t j = 2; j <= n; ++j) {
    lambda[j] = lambda[j - 1] + m.cap[ctx.order[j - 2]];
  }
  const BigRational p_max = n >= 1 ? mb.range(lambda[n]).second : BigRational(0);
  m.layout.p = mb.add_var(0, p_max < 0 ? BigRational(0) : p_max, true);
  const LinExpr p = LinExpr::var(m.layout.p);

  for (const PairInterval& pr : cell.pairs) {
    const LinExpr diff = z(pr.a) - z(pr.b);
    mb.add_ge(diff, BigRational(pr.lo));
    mb.add_le(diff, BigRational(pr.hi));
  }
  for (const auto& [key, bound] : cap_bounds) {
    mb.add_le(z(key.second) - z(key.first), BigRational(bound));
  }
  if (cell.j == 1) {
    mb.add_eq(p, BigRational(0));
  } else {
    mb.add_ge(p, lambda[cell.j - 1] + BigRational(1));
    mb.add_le(p, lambda[cell.j]);
  }

  // B x^0 + A x^1 = b^1
  for (std::size_t r = 0; r < inst.brick_rows(); ++r) {
    LinExpr row;
    for (std::size_t c = 0; c < tb; ++c) row.add(m.layout.head + c, inst.B(r, c));
    for (std::size_t h = 0; h < t; ++h) row += m.x1[h] * BigRational(inst.A(r, h));
    mb.add_eq(row, BigRational(inst.b[0][r]));
  }
  // C x^0 + D (n x^1 + offset_sum + theta Y) = b^0
  LinExpr Y = p;
  for (std::size_t i = 1; i < n; ++i) Y += m.lower[i];
  for (std::size_t r = 0; r < inst.global_rows(); ++r) {
    LinExpr row;
    for (std::size_t c = 0; c < tb; ++c) row.add(m.layout.head + c, inst.C(r, c));
    for (std::size_t h = 0; h < t; ++h) {
      if (sgn(inst.D(r, h)) == 0) continue;
      LinExpr sum = m.x1[h] * BigRational(BigInt(static_cast<unsigned long>(n))) +
                    LinExpr(BigRational(elim.offset_sum[h])) +
                    Y * BigRational(elim.theta[h]);
      row += sum * BigRational(inst.D(r, h));
    }
    mb.add_eq(row, BigRational(inst.b0[r]));
  }

  LinExpr objective;
  for (std::size_t c = 0; c < tb; ++c) objective.add(m.layout.head + c, inst.w[c]);
  for (std::size_t h = 0; h < t; ++h) {
    BigInt total = 0;
    for (std::size_t i = 0; i < n; ++i) total += inst.w[inst.brick_offset(i + 1) + h];
    objective += m.x1[h] * BigRational(total);
  }
  BigInt constant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    constant += dot(brick_slice(inst, inst.w, i), elim.offsets[i]);
  }
  objective += LinExpr(BigRational(constant));
  for (std::size_t i = 1; i < n; ++i) objective += m.lower[i] * BigRational(ctx.v[i]);
  if (cell.j >= 2) {
    for (std::size_t q = 2; q + 1 <= cell.j; ++q) {
      const std::size_t i = ctx.order[q - 2];
      objective += m.cap[i] * BigRational(ctx.v[i]);
    }
    const BigRational vj = ctx.v[ctx.order[cell.j - 2]];
    objective += (p - lambda[cell.j - 1]) * vj;
  }
  mb.maximize(objective);
  return m;
}

BigInt eval_expr(const LinExpr& e, const RatVector& point) {
  BigRational total = e.constant;
  for (const auto& [v, c] : e.terms) total += c * point[v];
  return to_integer(total, "cell expression");
}

// Program with no repeated bricks: C x^0 = b^0 over the head box.
FourBlockReport solve_head_only(const FourBlockInstance& inst) {
  FourBlockReport report;
  MipBuilder mb;
  const std::size_t tb = inst.head_width();
  for (std::size_t c = 0; c < tb; ++c) mb.add_var(inst.l[c], inst.u[c], true);
  for (std::size_t r = 0; r < inst.global_rows(); ++r) {
    LinExpr row;
    for (std::size_t c = 0; c < tb; ++c) row.add(c, inst.C(r, c));
    mb.add_eq(row, BigRational(inst.b0[r]));
  }
  LinExpr objective;
  for (std::size_t c = 0; c < tb; ++c) objective.add(c, inst.w[c]);
  mb.maximize(objective);
  report.cells = 1;
  if (mb.infeasible()) {
    report.reason = "Infeasible";
    return report;
  }
  MipStats stats;
  const LpResult r = solve_mip(mb.build(), {}, &stats);
  report.mip_nodes = stats.nodes;
  if (r.status != LpStatus::kOptimal) {
    report.reason = "Infeasible";
    return report;
  }
  IntVector x;
  for (std::size_t c = 0; c < tb; ++c) x.push_back(to_integer(r.point[c], "x^0"));
  const Evaluation ev = evaluate(inst, x);
  if (!ev.feasible) throw LiftInconsistency("solve_4block_snf: head solution fails");
  report.feasible = true;
  report.feasible_cells = 1;
  report.solution = Solution{std::move(x), ev.objective, SolverTag::kFourBlockSnf};
  return report;
}

}  // namespace

EliminationData eliminate_snf(const FourBlockInstance& inst) {
  const std::size_t n = inst.n, s = inst.brick_rows(), t = inst.brick_width();
  EliminationData e;
  e.method = EliminationMethod::kSnf;
  e.snf = smith_normal_form(inst.A);
  const SnfDecomposition& snf = *e.snf;
  if (snf.rank != s || t != s + 1) {
    throw NotFourBlockEligible("eliminate_snf: A must have full row rank and "
                               "one more column than rows");
  }
  e.theta = snf.V.column(t - 1);
  e.offset_sum.assign(t, 0);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector diff(s);
    for (std::size_t r = 0; r < s; ++r) diff[r] = inst.b[i][r] - inst.b[0][r];
    const IntVector bt = snf.U * diff;
    IntVector y(t, 0);
    for (std::size_t j = 0; j < s; ++j) {
      if (!mpz_divisible_p(bt[j].get_mpz_t(), snf.alpha(j).get_mpz_t())) {
        e.divisible = false;
        return e;
      }
      y[j] = bt[j] / snf.alpha(j);
    }
    IntVector off = snf.V * y;
    for (std::size_t h = 0; h < t; ++h) e.offset_sum[h] += off[h];
    e.offsets.push_back(std::move(off));
  }
  return e;
}

EliminationData eliminate_bezout(const FourBlockInstance& inst) {
  if (inst.brick_rows() != 1 || inst.brick_width() != 2 || inst.A.is_zero()) {
    throw NotFourBlockEligible("eliminate_bezout: A must be a nonzero 1 x 2 row");
  }
  const BigInt& lambda = inst.A(0, 0);
  const BigInt& mu = inst.A(0, 1);
  EliminationData e;
  e.method = EliminationMethod::kBezout;
  const BezoutSolution base = extended_gcd(lambda, mu);
  e.theta = {base.step_x, -base.step_y};
  e.offset_sum.assign(2, 0);
  for (std::size_t i = 0; i < inst.n; ++i) {
    const BigInt c = inst.b[i][0] - inst.b[0][0];
    const auto sol = solve_two_var_diophantine(lambda, mu, c);
    if (!sol) {
      e.divisible = false;
      return e;
    }
    e.offsets.push_back({sol->x, sol->y});
    e.offset_sum[0] += sol->x;
    e.offset_sum[1] += sol->y;
  }
  return e;
}

BigInt rounded_lower(const BigInt& lo, const BigInt& hi, const BigInt& theta,
                     const BigInt& xi) {
  return sgn(theta) > 0 ? ceil_div(lo - xi, theta) : ceil_div(hi - xi, theta);
}

BigInt rounded_upper(const BigInt& lo, const BigInt& hi, const BigInt& theta,
                     const BigInt& xi) {
  return sgn(theta) > 0 ? floor_div(hi - xi, theta) : floor_div(lo - xi, theta);
}

std::vector<SubInterval> sub_intervals(const IntVector& lo, const IntVector& hi,
                                       const BigInt& theta) {
  if (sgn(theta) == 0) throw PreconditionError("sub_intervals: theta is zero");
  const BigInt m = abs(theta);
  // Each rounded bound changes value only next to the remainder of its
  // shifted bound, so these starts contain every breakpoint.
  std::vector<BigInt> starts{BigInt(0)};
  for (const IntVector* side : {&lo, &hi}) {
    for (const BigInt& v : *side) {
      const BigInt r = floor_mod(v, m);
      starts.push_back(r);
      if (r + 1 < m) starts.push_back(r + 1);
    }
  }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  std::vector<SubInterval> out;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    SubInterval s;
    s.lo = starts[k];
    s.hi = k + 1 < starts.size() ? BigInt(starts[k + 1] - 1) : BigInt(m - 1);
    for (std::size_t i = 0; i < lo.size(); ++i) {
      s.d.push_back(rounded_lower(lo[i], hi[i], theta, s.lo));
      s.d_bar.push_back(rounded_upper(lo[i], hi[i], theta, s.lo));
    }
    if (!out.empty() && out.back().d == s.d && out.back().d_bar == s.d_bar) {
      out.back().hi = s.hi;
    } else {
      out.push_back(std::move(s));
    }
  }
  return out;
}

SubIntervalGrid build_grid(const FourBlockInstance& inst,
                           const EliminationData& elim) {
  const std::size_t n = inst.n, t = inst.brick_width();
  SubIntervalGrid grid;
  grid.direct.resize(t);
  for (std::size_t h = 0; h < t; ++h) {
    IntVector lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t off = inst.brick_offset(i + 1) + h;
      lo[i] = inst.l[off] - elim.offsets[i][h];
      hi[i] = inst.u[off] - elim.offsets[i][h];
    }
    if (sgn(elim.theta[h]) == 0) {
      BigInt a = *std::max_element(lo.begin(), lo.end());
      BigInt b = *std::min_element(hi.begin(), hi.end());
      if (a > b) grid.direct_empty = true;
      grid.direct[h] = std::make_pair(std::move(a), std::move(b));
      continue;
    }
    grid.coords.push_back(h);
    grid.cells.push_back(sub_intervals(lo, hi, elim.theta[h]));
  }
  return grid;
}

CellContext make_cell_context(const FourBlockInstance& inst,
                              const EliminationData& elim,
                              const SubIntervalGrid& grid) {
  CellContext ctx{&inst, &elim, &grid, {}, {}};
  for (std::size_t i = 0; i < inst.n; ++i) {
    ctx.v.push_back(dot(brick_slice(inst, inst.w, i), elim.theta));
  }
  for (std::size_t i = 1; i < inst.n; ++i) ctx.order.push_back(i);
  std::stable_sort(ctx.order.begin(), ctx.order.end(),
                   [&](std::size_t a, std::size_t b) { return ctx.v[a] > ctx.v[b]; });
  return ctx;
}

void enumerate_cells(const CellContext& ctx,
                     const std::function<void(const CellProblem&)>& visit) {
  const SubIntervalGrid& grid = *ctx.grid;
  const std::size_t n = ctx.instance->n;
  const std::size_t k = grid.coords.size();
  if (grid.direct_empty || n == 0) return;

  CellProblem cell;
  cell.xi_choice.assign(k, 0);
  std::vector<std::pair<std::size_t, std::size_t>> pair_ids;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) pair_ids.emplace_back(a, b);
  }

  auto emit = [&]() {
    cell.lower_arg.assign(n, 0);
    cell.upper_arg.assign(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
      // Position whose bound dominates every other one across the cell.
      std::optional<std::size_t> L, U;
      for (std::size_t a = 0; a < k && !L; ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < k && ok; ++b) {
          if (a == b) continue;
          const BigInt c = chosen(ctx, cell, a).d[i] - chosen(ctx, cell, b).d[i];
          ok = c >= diff_range(cell.pairs, k, a, b).second;
        }
        if (ok) L = a;
      }
      for (std::size_t a = 0; a < k && !U; ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < k && ok; ++b) {
          if (a == b) continue;
          const BigInt c =
              chosen(ctx, cell, a).d_bar[i] - chosen(ctx, cell, b).d_bar[i];
          ok = c <= diff_range(cell.pairs, k, a, b).first;
        }
        if (ok) U = a;
      }
      if (!L || !U) return;
      if (*L == *U &&
          chosen(ctx, cell, *U).d_bar[i] < chosen(ctx, cell, *L).d[i]) {
        return;
      }
      cell.lower_arg[i] = *L;
      cell.upper_arg[i] = *U;
    }
    for (std::size_t j = 1; j <= n; ++j) {
      cell.j = j;
      visit(cell);
    }
  };

  auto triples_ok = [&](std::size_t assigned) {
    // Checks z_a - z_c = (z_a - z_b) + (z_b - z_c) for assigned triples.
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        for (std::size_t c = b + 1; c < k; ++c) {
          const std::size_t ac = a * k - a * (a + 1) / 2 + (c - a - 1);
          const std::size_t ab = a * k - a * (a + 1) / 2 + (b - a - 1);
          const std::size_t bc = b * k - b * (b + 1) / 2 + (c - b - 1);
          if (ac >= assigned || ab >= assigned || bc >= assigned) continue;
          const BigInt lo = cell.pairs[ab].lo + cell.pairs[bc].lo;
          const BigInt hi = cell.pairs[ab].hi + cell.pairs[bc].hi;
          if (lo > cell.pairs[ac].hi || hi < cell.pairs[ac].lo) return false;
        }
      }
    }
    return true;
  };

  std::function<void(std::size_t)> choose_pair = [&](std::size_t q) {
    if (q == pair_ids.size()) {
      emit();
      return;
    }
    const auto [a, b] = pair_ids[q];
    const SubInterval& sa = chosen(ctx, cell, a);
    const SubInterval& sb = chosen(ctx, cell, b);
    const BigInt reach_lo = sa.d[0] - sb.d_bar[0];
    const BigInt reach_hi = sa.d_bar[0] - sb.d[0];
    std::vector<BigInt> crit;
    for (std::size_t i = 1; i < n; ++i) {
      crit.push_back(sa.d[i] - sb.d[i]);
      crit.push_back(sa.d_bar[i] - sb.d_bar[i]);
    }
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    // Intervals (-inf, c_1 - 1], [c_1, c_2 - 1], ..., [c_K, inf) clipped to
    // the reachable range.
    std::vector<std::pair<BigInt, BigInt>> pieces;
    if (crit.empty()) {
      pieces.emplace_back(reach_lo, reach_hi);
    } else {
      pieces.emplace_back(reach_lo, std::min<BigInt>(reach_hi, crit.front() - 1));
      for (std::size_t c = 0; c < crit.size(); ++c) {
        BigInt lo = std::max<BigInt>(reach_lo, crit[c]);
        BigInt hi = c + 1 < crit.size() ? BigInt(crit[c + 1] - 1) : reach_hi;
        if (hi > reach_hi) hi = reach_hi;
        pieces.emplace_back(std::move(lo), std::move(hi));
      }
    }
    for (auto& [lo, hi] : pieces) {
      if (lo > hi) continue;
      cell.pairs.push_back(PairInterval{a, b, lo, hi});
      if (triples_ok(q + 1)) choose_pair(q + 1);
      cell.pairs.pop_back();
    }
  };

  std::function<void(std::size_t)> choose_xi = [&](std::size_t a) {
    if (a == k) {
      choose_pair(0);
      return;
    }
    for (std::size_t s = 0; s < grid.cells[a].size(); ++s) {
      const SubInterval& sub = grid.cells[a][s];
      if (sub.d[0] > sub.d_bar[0]) continue;  // brick 1 leaves no z_h
      cell.xi_choice[a] = s;
      choose_xi(a + 1);
    }
  };
  choose_xi(0);
}

CellSolution solve_cell(const CellContext& ctx, const CellProblem& cell,
                        const std::optional<BigInt>& must_reach) {
  CellModel m = build_cell_model(ctx, cell);
  CellSolution out;
  if (m.mb.infeasible()) return out;
  MipOptions options;
  if (must_reach) options.cutoff = BigRational(*must_reach - 1) - m.mb.objective_offset();
  const LpResult r = solve_mip(m.mb.build(), options, &out.stats);
  if (r.status != LpStatus::kOptimal) return out;
  out.feasible = true;
  out.value = to_integer(r.value + m.mb.objective_offset(), "cell value");
  out.point = r.point;
  return out;
}

Solution lift_solution(const CellContext& ctx, const CellProblem& cell,
                       const CellSolution& solved) {
  if (!solved.feasible) throw PreconditionError("lift_solution: cell is infeasible");
  const FourBlockInstance& inst = *ctx.instance;
  const EliminationData& elim = *ctx.elim;
  const std::size_t n = inst.n, t = inst.brick_width(), tb = inst.head_width();
  const CellModel m = build_cell_model(ctx, cell);
  const RatVector& pt = solved.point;

  IntVector x;
  for (std::size_t c = 0; c < tb; ++c) x.push_back(to_integer(pt[m.layout.head + c], "x^0"));
  IntVector x1(t);
  for (std::size_t h = 0; h < t; ++h) x1[h] = eval_expr(m.x1[h], pt);

  // Fill the merged slack in merge order.
  BigInt rest = to_integer(pt[m.layout.p], "p");
  IntVector y(n, 0);
  for (std::size_t i = 1; i < n; ++i) y[i] = eval_expr(m.lower[i], pt);
  for (std::size_t i : ctx.order) {
    const BigInt cap = eval_expr(m.cap[i], pt);
    if (sgn(cap) < 0) throw LiftInconsistency("lift_solution: negative cap");
    const BigInt share = cap < rest ? cap : rest;
    y[i] += share;
    rest -= share;
  }
  if (sgn(rest) != 0) throw LiftInconsistency("lift_solution: p exceeds the caps");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t h = 0; h < t; ++h) {
      x.push_back(x1[h] + elim.offsets[i][h] + elim.theta[h] * y[i]);
    }
  }
  const Evaluation ev = evaluate(inst, x);
  if (!ev.feasible) {
    throw LiftInconsistency("lift_solution: lifted point is infeasible: " +
                            ev.violations.front().describe());
  }
  if (ev.objective != solved.value) {
    throw LiftInconsistency("lift_solution: lifted objective " +
                            to_decimal(ev.objective) + " != cell value " +
                            to_decimal(solved.value));
  }
  return Solution{std::move(x), ev.objective, SolverTag::kFourBlockSnf};
}

FourBlockReport solve_4block_snf(const FourBlockInstance& inst,
                                 const FourBlockOptions& options) {
  // The rank condition, not the routing tag: A = (1, 1) routes to the
  // all-ones solver but is eligible here too.
  if (inst.brick_width() != inst.brick_rows() + 1 ||
      integer_rank(inst.A) != inst.brick_rows()) {
    throw NotFourBlockEligible(
        "solve_4block_snf: needs t_A = s_A + 1 and full row rank");
  }
  if (inst.n == 0) return solve_head_only(inst);

  FourBlockReport report;
  const EliminationData elim = options.method == EliminationMethod::kBezout
                                   ? eliminate_bezout(inst)
                                   : eliminate_snf(inst);
  if (!elim.divisible) {
    report.reason = "DivisibilityFail";
    return report;
  }
  const SubIntervalGrid grid = build_grid(inst, elim);
  if (grid.direct_empty) {
    report.reason = "EmptyInterval";
    return report;
  }
  const CellContext ctx = make_cell_context(inst, elim, grid);
  std::vector<CellProblem> cells;
  enumerate_cells(ctx, [&](const CellProblem& c) { cells.push_back(c); });
  report.cells = cells.size();
  if (options.record_cells) report.cell_values.resize(cells.size());

  std::mutex mu;
  std::optional<std::size_t> best_index;
  CellSolution best;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= cells.size()) return;
      std::optional<BigInt> must_reach;
      if (!options.record_cells) {
        std::lock_guard<std::mutex> lock(mu);
        if (best_index) must_reach = best.value;
      }
      CellSolution s = solve_cell(ctx, cells[idx], must_reach);
      std::lock_guard<std::mutex> lock(mu);
      report.mip_nodes += s.stats.nodes;
      if (options.record_cells && s.feasible) report.cell_values[idx] = s.value;
      if (!s.feasible) continue;
      ++report.feasible_cells;
      if (!best_index || s.value > best.value ||
          (s.value == best.value && idx < *best_index)) {
        best_index = idx;
        best = std::move(s);
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  if (!best_index) {
    report.reason = "Infeasible";
    return report;
  }
  report.feasible = true;
  report.solution = lift_solution(ctx, cells[*best_index], best);
  return report;
}

}  // namespace blockip
