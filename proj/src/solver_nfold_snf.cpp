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

#include "blockip/solver_nfold_snf.hpp"

#include <algorithm>
#include <numeric>

namespace blockip {

std::string_view to_string(NfoldSnfReason reason) {
  switch (reason) {
    case NfoldSnfReason::kNone:
      return "None";
    case NfoldSnfReason::kDivisibilityFail:
      return "DivisibilityFail";
    case NfoldSnfReason::kAggregateInconsistent:
      return "AggregateInconsistent";
    case NfoldSnfReason::kEmptyInterval:
      return "EmptyInterval";
    case NfoldSnfReason::kAggregateOutOfRange:
      return "AggregateOutOfRange";
  }
  return "?";
}

IntervalReduction reduce_box_to_interval(const IntMatrix& V,
                                         const IntVector& fixed_y,
                                         const IntVector& l,
                                         const IntVector& u) {
  const std::size_t t = V.cols();
  if (V.rows() != t || fixed_y.size() + 1 != t || l.size() != t ||
      u.size() != t) {
    throw DimensionMismatch("reduce_box_to_interval: inconsistent sizes");
  }
  IntervalReduction out;
  std::optional<BigInt> lo, hi;
  for (std::size_t h = 0; h < t; ++h) {
    BigInt base = 0;
    for (std::size_t j = 0; j + 1 < t; ++j) base += V(h, j) * fixed_y[j];
    const BigInt& theta = V(h, t - 1);
    const BigInt lower = l[h] - base, upper = u[h] - base;
    if (sgn(theta) == 0) {
      if (sgn(lower) > 0 || sgn(upper) < 0) {
        out.status = IntervalReduction::Status::kConstantRowViolated;
        return out;
      }
      continue;
    }
    // lower <= theta * y <= upper
    BigInt a, b;
    if (sgn(theta) > 0) {
      a = ceil_div(lower, theta);
      b = floor_div(upper, theta);
    } else {
      a = ceil_div(upper, theta);
      b = floor_div(lower, theta);
    }
    if (!lo || a > *lo) lo = a;
    if (!hi || b < *hi) hi = b;
  }
  if (!lo) {
    throw PreconditionError(
        "reduce_box_to_interval: last column of V is zero");
  }
  if (*lo > *hi) {
    out.status = IntervalReduction::Status::kEmpty;
    return out;
  }
  out.interval = {*lo, *hi};
  return out;
}

IntVector greedy_ip8(const IntVector& caps, const IntVector& weights,
                     const BigInt& target) {
  if (caps.size() != weights.size()) {
    throw DimensionMismatch("greedy_ip8: caps and weights differ in length");
  }
  BigInt total = 0;
  for (const BigInt& c : caps) total += c;
  if (sgn(target) < 0 || target > total) {
    throw TargetOutOfRange("greedy_ip8: target " + to_decimal(target) +
                           " outside [0, " + to_decimal(total) + "]");
  }
  std::vector<std::size_t> order(caps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weights[a] > weights[b];
  });
  IntVector p(caps.size(), 0);
  BigInt rest = target;
  for (std::size_t i : order) {
    if (sgn(rest) == 0) break;
    p[i] = caps[i] < rest ? caps[i] : rest;
    rest -= p[i];
  }
  return p;
}

NfoldSnfReport solve_nfold_snf(const FourBlockInstance& inst) {
  if (!inst.is_nfold() || inst.brick_width() != inst.brick_rows() + 1 ||
      integer_rank(inst.A) != inst.brick_rows()) {
    throw NotSnfEligible(
        "solve_nfold_snf: needs B = C = 0, t_A = s_A + 1 and full row rank");
  }
  const std::size_t n = inst.n, s = inst.brick_rows(), t = inst.brick_width();
  const std::size_t tb = inst.head_width();
  NfoldSnfReport report;
  NfoldSnfContext& ctx = report.context;
  ctx.snf = smith_normal_form(inst.A);
  const IntMatrix& V = ctx.snf.V;
  const IntVector theta = V.column(t - 1);

  // Brick rows fix y^i_1..y^i_s; f^i is the fixed part of x^i.
  std::vector<IntVector> f(n, IntVector(t, 0));
  IntVector f_sum(t, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const IntVector bt = ctx.snf.U * inst.b[i];
    IntVector y(s);
    for (std::size_t j = 0; j < s; ++j) {
      if (!mpz_divisible_p(bt[j].get_mpz_t(), ctx.snf.alpha(j).get_mpz_t())) {
        report.reason = NfoldSnfReason::kDivisibilityFail;
        return report;
      }
      y[j] = bt[j] / ctx.snf.alpha(j);
    }
    for (std::size_t h = 0; h < t; ++h) {
      for (std::size_t j = 0; j < s; ++j) f[i][h] += V(h, j) * y[j];
      f_sum[h] += f[i][h];
    }
    ctx.fixed_y.push_back(std::move(y));
  }

  // D (sum f^i + theta * Y) = b0 determines Y = sum_i y^i_t.
  for (std::size_t r = 0; r < inst.global_rows(); ++r) {
    BigInt kappa = 0, rest = inst.b0[r];
    for (std::size_t h = 0; h < t; ++h) {
      kappa += inst.D(r, h) * theta[h];
      rest -= inst.D(r, h) * f_sum[h];
    }
    if (sgn(kappa) == 0) {
      if (sgn(rest) != 0) {
        report.reason = NfoldSnfReason::kAggregateInconsistent;
        return report;
      }
      continue;
    }
    if (!mpz_divisible_p(rest.get_mpz_t(), kappa.get_mpz_t())) {
      report.reason = NfoldSnfReason::kAggregateInconsistent;
      return report;
    }
    BigInt root = rest / kappa;
    if (ctx.d0 && *ctx.d0 != root) {
      report.reason = NfoldSnfReason::kAggregateInconsistent;
      return report;
    }
    ctx.d0 = std::move(root);
  }

  IntVector caps(n);
  BigInt lo_sum = 0, cap_sum = 0;
  ctx.c0 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t off = inst.brick_offset(i + 1);
    const IntVector l(inst.l.begin() + off, inst.l.begin() + off + t);
    const IntVector u(inst.u.begin() + off, inst.u.begin() + off + t);
    const IntervalReduction red = reduce_box_to_interval(V, ctx.fixed_y[i], l, u);
    if (red.status != IntervalReduction::Status::kOk) {
      report.reason = NfoldSnfReason::kEmptyInterval;
      return report;
    }
    BigInt wt = 0;
    for (std::size_t h = 0; h < t; ++h) {
      wt += inst.w[off + h] * theta[h];
      ctx.c0 += inst.w[off + h] * f[i][h];
    }
    ctx.c0 += wt * red.interval.lo;
    caps[i] = red.interval.hi - red.interval.lo;
    lo_sum += red.interval.lo;
    cap_sum += caps[i];
    ctx.reduced_weights.push_back(std::move(wt));
    ctx.intervals.push_back(red.interval);
  }

  IntVector p;
  if (ctx.d0) {
    const BigInt target = *ctx.d0 - lo_sum;
    if (sgn(target) < 0 || target > cap_sum) {
      report.reason = NfoldSnfReason::kAggregateOutOfRange;
      return report;
    }
    p = greedy_ip8(caps, ctx.reduced_weights, target);
  } else {
    // No coupling row sees the free values: each brick picks its best end.
    for (std::size_t i = 0; i < n; ++i) {
      p.push_back(sgn(ctx.reduced_weights[i]) > 0 ? caps[i] : BigInt(0));
    }
  }

  // Uncoupled head variables go to their better bound.
  IntVector x;
  for (std::size_t k = 0; k < tb; ++k) {
    x.push_back(sgn(inst.w[k]) > 0 ? inst.u[k] : inst.l[k]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt y_free = ctx.intervals[i].lo + p[i];
    for (std::size_t h = 0; h < t; ++h) x.push_back(f[i][h] + theta[h] * y_free);
  }
  const Evaluation ev = evaluate(inst, x);
  if (!ev.feasible) {
    throw InternalInconsistency("solve_nfold_snf: reconstructed point is "
                                "infeasible: " +
                                ev.violations.front().describe());
  }
  report.feasible = true;
  report.solution = Solution{std::move(x), ev.objective, SolverTag::kNfoldSnf};
  return report;
}

}  // namespace blockip
