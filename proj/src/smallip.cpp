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

#include "blockip/smallip.hpp"

#include <map>
#include <queue>

namespace blockip {

namespace {

struct Node {
  BigRational bound;  // LP value of the node
  std::size_t id = 0;
  RatVector lower;
  RatVector upper;
  RatVector point;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.id > b.id;
  }
};

// Index of the masked variable farthest from an integer, or npos when the
// point is integral on the mask.
std::size_t branching_variable(const RatVector& point,
                               const std::vector<bool>& mask) {
  std::size_t best = static_cast<std::size_t>(-1);
  BigRational best_distance = 0;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (!mask[j] || is_integral(point[j])) continue;
    const BigRational frac = point[j] - BigRational(floor_of(point[j]));
    const BigRational distance = frac < 1 - frac ? frac : BigRational(1 - frac);
    if (distance > best_distance) {
      best_distance = distance;
      best = j;
    }
  }
  return best;
}

}  // namespace

LpResult solve_mip(const MipProblem& problem, const MipOptions& options,
                   MipStats* stats) {
  const std::size_t n = problem.lp.variable_count();
  if (problem.integer_mask.size() != n) {
    throw MalformedProblem("solve_mip: integer mask length != variable count");
  }
  MipStats local;
  MipStats& st = stats ? *stats : local;

  LpProblem lp = problem.lp;
  LpResult infeasible;
  infeasible.status = LpStatus::kInfeasible;
  if (lp.lower.size() == n && lp.upper.size() == n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!problem.integer_mask[j]) continue;
      lp.lower[j] = ceil_of(lp.lower[j]);
      lp.upper[j] = floor_of(lp.upper[j]);
      if (lp.lower[j] > lp.upper[j]) {
        if (problem.lp.lower[j] > problem.lp.upper[j]) break;  // malformed
        return infeasible;
      }
    }
  }

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::size_t next_id = 0;
  auto evaluate = [&](RatVector lower, RatVector upper) {
    ++st.nodes;
    lp.lower = std::move(lower);
    lp.upper = std::move(upper);
    LpResult r = solve_lp(lp);
    st.lp_pivots += r.pivots;
    if (r.status != LpStatus::kOptimal) return;
    if (options.cutoff && r.value <= *options.cutoff) return;
    open.push(Node{r.value, next_id++, lp.lower, lp.upper, std::move(r.point)});
  };
  evaluate(lp.lower, lp.upper);

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    const std::size_t j = branching_variable(node.point, problem.integer_mask);
    if (j == static_cast<std::size_t>(-1)) {
      LpResult best;
      best.status = LpStatus::kOptimal;
      best.value = node.bound;
      best.point = std::move(node.point);
      best.pivots = st.lp_pivots;
      return best;
    }
    const BigInt down = floor_of(node.point[j]);
    RatVector upper = node.upper;
    upper[j] = down;
    if (node.lower[j] <= upper[j]) evaluate(node.lower, std::move(upper));
    RatVector lower = node.lower;
    lower[j] = down + 1;
    if (lower[j] <= node.upper[j]) evaluate(std::move(lower), node.upper);
  }
  infeasible.pivots = st.lp_pivots;
  return infeasible;
}

LinExpr LinExpr::var(std::size_t v, const BigRational& coef) {
  LinExpr e;
  e.terms.emplace_back(v, coef);
  return e;
}

LinExpr& LinExpr::add(std::size_t v, const BigRational& coef) {
  if (sgn(coef) != 0) terms.emplace_back(v, coef);
  return *this;
}

LinExpr& LinExpr::operator+=(const LinExpr& other) {
  for (const auto& [v, c] : other.terms) add(v, c);
  constant += other.constant;
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& other) {
  for (const auto& [v, c] : other.terms) add(v, -c);
  constant -= other.constant;
  return *this;
}

LinExpr& LinExpr::operator*=(const BigRational& factor) {
  for (auto& term : terms) term.second *= factor;
  constant *= factor;
  return *this;
}

std::size_t MipBuilder::add_var(const BigRational& lower,
                                const BigRational& upper, bool integer) {
  lower_.push_back(lower);
  upper_.push_back(upper);
  integer_.push_back(integer);
  objective_.emplace_back(0);
  if (lower > upper || (integer && ceil_of(lower) > floor_of(upper))) {
    infeasible_ = true;
  }
  return lower_.size() - 1;
}

std::pair<BigRational, BigRational> MipBuilder::range(const LinExpr& e) const {
  BigRational lo = e.constant, hi = e.constant;
  for (const auto& [v, c] : e.terms) {
    if (sgn(c) > 0) {
      lo += c * lower_[v];
      hi += c * upper_[v];
    } else {
      lo += c * upper_[v];
      hi += c * lower_[v];
    }
  }
  return {lo, hi};
}

void MipBuilder::add_eq(const LinExpr& lhs, const LinExpr& rhs) {
  LinExpr row = lhs - rhs;
  auto [lo, hi] = range(row);
  if (lo > 0 || hi < 0) infeasible_ = true;
  if (lo == 0 && hi == 0) return;
  rows_.push_back(std::move(row));
}

void MipBuilder::add_le(const LinExpr& lhs, const LinExpr& rhs) {
  LinExpr row = lhs - rhs;  // row <= 0
  auto [lo, hi] = range(row);
  if (lo > 0) {
    infeasible_ = true;
    return;
  }
  if (hi <= 0) return;
  const std::size_t slack = add_var(0, -lo, false);
  row.add(slack, 1);
  rows_.push_back(std::move(row));
}

void MipBuilder::maximize(const LinExpr& objective) {
  for (const auto& [v, c] : objective.terms) objective_[v] += c;
  offset_ += objective.constant;
}

MipProblem MipBuilder::build() const {
  MipProblem p;
  const std::size_t n = lower_.size();
  p.lp.objective = objective_;
  p.lp.lower = lower_;
  p.lp.upper = upper_;
  p.integer_mask = integer_;
  for (const LinExpr& row : rows_) {
    RatVector dense(n);
    for (const auto& [v, c] : row.terms) dense[v] += c;
    p.lp.eq_matrix.push_back(std::move(dense));
    p.lp.eq_rhs.push_back(-row.constant);
  }
  return p;
}

}  // namespace blockip
