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

#include "blockip/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace blockip {

namespace {

class LatticeSearch {
 public:
  explicit LatticeSearch(const FlatIp& ip) : ip_(ip), n_(ip.l.size()) {
    const std::size_t m = ip.rows.size();
    rows_of_.resize(n_);
    sum_.assign(m, 0);
    rem_lo_.assign(m, 0);
    rem_hi_.assign(m, 0);
    open_.assign(m, 0);
    for (std::size_t r = 0; r < m; ++r) {
      for (const auto& [v, c] : ip.rows[r].terms) {
        if (v >= n_) throw DimensionMismatch("enumerate_optimum: row refers to a missing variable");
        rows_of_[v].push_back({r, c});
        add_range(r, c, v, 1);
        ++open_[r];
      }
    }
    obj_rem_ = 0;
    for (std::size_t v = 0; v < n_; ++v) obj_rem_ += best_term(v);
    x_.assign(n_, 0);
    // Narrow domains first: binary switches then force the wide variables
    // through the row ranges instead of being enumerated under them.
    order_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return ip.u[a] - ip.l[a] < ip.u[b] - ip.l[b];
    });
  }

  OracleResult run() {
    // Rows with no terms are settled up front.
    for (std::size_t r = 0; r < ip_.rows.size(); ++r) {
      if (open_[r] == 0 && ip_.rows[r].rhs != 0) return result_;
    }
    obj_ = 0;
    search(0);
    return result_;
  }

 private:
  struct Entry {
    std::size_t row;
    BigInt coef;
  };

  BigInt best_term(std::size_t v) const {
    const BigInt a = ip_.w[v] * ip_.l[v], b = ip_.w[v] * ip_.u[v];
    return a > b ? a : b;
  }

  void add_range(std::size_t r, const BigInt& c, std::size_t v, int sign) {
    const BigInt a = c * ip_.l[v], b = c * ip_.u[v];
    if (sign > 0) {
      rem_lo_[r] += a < b ? a : b;
      rem_hi_[r] += a < b ? b : a;
    } else {
      rem_lo_[r] -= a < b ? a : b;
      rem_hi_[r] -= a < b ? b : a;
    }
  }

  void search(std::size_t depth) {
    ++result_.nodes;
    if (depth == n_) {
      if (!result_.feasible || obj_ > result_.solution.objective) {
        result_.feasible = true;
        result_.solution = Solution{x_, obj_, SolverTag::kBruteforce};
      }
      return;
    }
    const std::size_t v = order_[depth];
    for (const Entry& e : rows_of_[v]) {
      add_range(e.row, e.coef, v, -1);
      --open_[e.row];
    }
    const BigInt term_best = best_term(v);
    obj_rem_ -= term_best;

    // Values of x_v that keep every touched row attainable.
    BigInt lo = ip_.l[v], hi = ip_.u[v];
    for (const Entry& e : rows_of_[v]) {
      const BigInt need_lo = ip_.rows[e.row].rhs - sum_[e.row] - rem_hi_[e.row];
      const BigInt need_hi = ip_.rows[e.row].rhs - sum_[e.row] - rem_lo_[e.row];
      BigInt a, b;
      if (sgn(e.coef) > 0) {
        a = ceil_div(need_lo, e.coef);
        b = floor_div(need_hi, e.coef);
      } else {
        a = ceil_div(need_hi, e.coef);
        b = floor_div(need_lo, e.coef);
      }
      if (a > lo) lo = a;
      if (b < hi) hi = b;
    }
    for (BigInt val = lo; val <= hi; ++val) {
      const BigInt gain = ip_.w[v] * val;
      if (result_.feasible && obj_ + gain + obj_rem_ <= result_.solution.objective) {
        continue;
      }
      for (const Entry& e : rows_of_[v]) sum_[e.row] += e.coef * val;
      x_[v] = val;
      obj_ += gain;
      search(depth + 1);
      obj_ -= gain;
      for (const Entry& e : rows_of_[v]) sum_[e.row] -= e.coef * val;
    }
    x_[v] = 0;

    obj_rem_ += term_best;
    for (const Entry& e : rows_of_[v]) {
      add_range(e.row, e.coef, v, 1);
      ++open_[e.row];
    }
  }

  const FlatIp& ip_;
  std::size_t n_;
  std::vector<std::vector<Entry>> rows_of_;
  IntVector sum_;
  IntVector rem_lo_;
  IntVector rem_hi_;
  std::vector<std::size_t> open_;
  std::vector<std::size_t> order_;
  IntVector x_;
  BigInt obj_;
  BigInt obj_rem_;
  OracleResult result_;
};

// All subset sums of betas[from, to) with their subset sizes.
std::vector<std::pair<BigInt, std::size_t>> half_sums(const IntVector& betas,
                                                      std::size_t from,
                                                      std::size_t to) {
  std::vector<std::pair<BigInt, std::size_t>> sums{{BigInt(0), 0}};
  for (std::size_t i = from; i < to; ++i) {
    const std::size_t count = sums.size();
    for (std::size_t k = 0; k < count; ++k) {
      sums.emplace_back(sums[k].first + betas[i], sums[k].second + 1);
    }
  }
  return sums;
}

constexpr unsigned long kTableLimit = 1'000'000;
constexpr std::size_t kMitmDpLimit = 25;
constexpr std::size_t kMitmLimit = 40;

}  // namespace

BigInt lattice_size(const IntVector& l, const IntVector& u) {
  if (l.size() != u.size()) throw DimensionMismatch("lattice_size: l and u differ");
  BigInt total = 1;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (u[j] < l[j]) return 0;
    total *= u[j] - l[j] + 1;
  }
  return total;
}

OracleResult enumerate_optimum(const FlatIp& ip, const OracleBudget& budget) {
  if (ip.u.size() != ip.l.size() || ip.w.size() != ip.l.size()) {
    throw DimensionMismatch("enumerate_optimum: l, u and w differ in length");
  }
  if (budget.max_points < 1) throw PreconditionError("oracle budget must be >= 1");
  const BigInt points = lattice_size(ip.l, ip.u);
  if (points > budget.max_points) {
    throw BudgetExceeded("enumerate_optimum: " + to_decimal(points) +
                         " lattice points exceed the budget of " +
                         to_decimal(budget.max_points));
  }
  if (sgn(points) == 0) return {};
  return LatticeSearch(ip).run();
}

OracleResult enumerate_optimum(const FourBlockInstance& instance,
                               const OracleBudget& budget) {
  return enumerate_optimum(flatten(instance), budget);
}

OracleResult enumerate_optimum(const GeneralizedNFoldInstance& instance,
                               const OracleBudget& budget) {
  return enumerate_optimum(flatten(instance), budget);
}

bool subset_sum_dp(const SubsetSumInstance& s) {
  if (sgn(s.target) < 0) return false;
  if (sgn(s.target) == 0) return true;
  if (s.target <= kTableLimit) {
    const unsigned long target = s.target.get_ui();
    std::vector<char> reach(target + 1, 0);
    reach[0] = 1;
    for (const BigInt& beta : s.betas) {
      if (sgn(beta) <= 0 || beta > s.target) continue;
      const unsigned long b = beta.get_ui();
      for (unsigned long v = target; v >= b; --v) {
        if (reach[v - b]) reach[v] = 1;
        if (v == b) break;
      }
    }
    return reach[target] != 0;
  }
  if (s.betas.size() <= kMitmDpLimit) return subset_sum_mitm(s);
  throw BudgetExceeded("subset_sum_dp: target above 10^6 with more than 25 items");
}

bool subset_sum_mitm(const SubsetSumInstance& s) {
  if (s.betas.size() > kMitmLimit) {
    throw BudgetExceeded("subset_sum_mitm: more than 40 items");
  }
  const std::size_t half = s.betas.size() / 2;
  auto left = half_sums(s.betas, 0, half);
  auto right = half_sums(s.betas, half, s.betas.size());
  IntVector rs;
  for (auto& [sum, count] : right) rs.push_back(sum);
  std::sort(rs.begin(), rs.end());
  for (const auto& [sum, count] : left) {
    if (std::binary_search(rs.begin(), rs.end(), BigInt(s.target - sum))) return true;
  }
  return false;
}

bool subset_sum_with_count(const SubsetSumInstance& s, std::size_t count) {
  const std::size_t n = s.betas.size();
  if (count > n) return false;
  if (s.target <= kTableLimit && sgn(s.target) >= 0) {
    const unsigned long target = s.target.get_ui();
    // reach[c][v]: some c items sum to v.
    std::vector<std::vector<char>> reach(count + 1, std::vector<char>(target + 1, 0));
    reach[0][0] = 1;
    for (const BigInt& beta : s.betas) {
      if (beta > s.target || sgn(beta) < 0) continue;
      const unsigned long b = beta.get_ui();
      for (std::size_t c = count; c >= 1; --c) {
        for (unsigned long v = target; v >= b; --v) {
          if (reach[c - 1][v - b]) reach[c][v] = 1;
          if (v == b) break;
        }
      }
    }
    return reach[count][target] != 0;
  }
  if (n > kMitmDpLimit) {
    throw BudgetExceeded("subset_sum_with_count: target above 10^6 with more "
                         "than 25 items");
  }
  const std::size_t half = n / 2;
  auto left = half_sums(s.betas, 0, half);
  auto right = half_sums(s.betas, half, n);
  std::map<std::size_t, IntVector> by_count;
  for (auto& [sum, c] : right) by_count[c].push_back(sum);
  for (auto& [c, sums] : by_count) std::sort(sums.begin(), sums.end());
  for (const auto& [sum, c] : left) {
    if (c > count) continue;
    auto it = by_count.find(count - c);
    if (it == by_count.end()) continue;
    if (std::binary_search(it->second.begin(), it->second.end(),
                           BigInt(s.target - sum))) {
      return true;
    }
  }
  return false;
}

}  // namespace blockip
