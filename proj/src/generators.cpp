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

#include <algorithm>

#include "blockip/intlin.hpp"

namespace blockip {

BigInt Rng::uniform(const BigInt& lo, const BigInt& hi) {
  const BigInt span = hi - lo + 1;
  if (sgn(span) <= 0) throw PreconditionError("Rng::uniform: empty range");
  // Enough random words to cover the span twice over; the bias is negligible.
  const std::size_t words = mpz_sizeinbase(span.get_mpz_t(), 2) / 64 + 2;
  BigInt acc = 0;
  for (std::size_t k = 0; k < words; ++k) {
    acc <<= 64;
    acc += BigInt(std::to_string(next()), 10);
  }
  return lo + BigInt(acc % span);
}

long Rng::small(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % span);
}

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long max_entry) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.small(-max_entry, max_entry);
  }
  return m;
}

// Full row rank s x (s + 1) matrix that is not a single all-ones row.
IntMatrix random_eligible_a(Rng& rng, std::size_t s, long max_entry) {
  for (;;) {
    IntMatrix A = random_matrix(rng, s, s + 1, max_entry);
    if (integer_rank(A) != s) continue;
    bool all_ones = s == 1;
    for (std::size_t c = 0; all_ones && c < s + 1; ++c) all_ones = A(0, c) == 1;
    if (!all_ones) return A;
  }
}

void random_box(Rng& rng, FourBlockInstance& inst, const RandomShape& shape) {
  const std::size_t N = inst.variable_count();
  inst.l.clear();
  inst.u.clear();
  inst.w.clear();
  for (std::size_t v = 0; v < N; ++v) {
    const long lo = rng.small(-shape.max_bound, shape.max_bound);
    inst.l.emplace_back(lo);
    inst.u.emplace_back(lo + rng.small(0, shape.max_width));
    inst.w.emplace_back(rng.small(-shape.max_weight, shape.max_weight));
  }
}

// Right-hand sides of a random point of the box, optionally perturbed.
void fill_rhs(Rng& rng, FourBlockInstance& inst, unsigned perturb_percent) {
  IntVector x;
  for (std::size_t v = 0; v < inst.variable_count(); ++v) {
    x.push_back(rng.uniform(inst.l[v], inst.u[v]));
  }
  const IntVector x0 = inst.brick(x, 0);
  const IntVector bx0 = inst.B * x0;
  IntVector sum(inst.brick_width(), 0);
  inst.b.clear();
  for (std::size_t i = 1; i <= inst.n; ++i) {
    const IntVector xi = inst.brick(x, i);
    IntVector bi = inst.A * xi;
    for (std::size_t r = 0; r < bi.size(); ++r) bi[r] += bx0[r];
    inst.b.push_back(std::move(bi));
    for (std::size_t h = 0; h < xi.size(); ++h) sum[h] += xi[h];
  }
  inst.b0 = inst.C * x0;
  const IntVector dsum = inst.D * sum;
  for (std::size_t r = 0; r < inst.b0.size(); ++r) inst.b0[r] += dsum[r];

  if (perturb_percent > 0 && rng.coin(perturb_percent)) {
    const std::size_t slots = inst.b0.size() + inst.n * inst.brick_rows();
    if (slots == 0) return;
    const std::size_t k = rng.index(slots);
    const long delta = rng.coin(50) ? 1 : -1;
    if (k < inst.b0.size()) {
      inst.b0[k] += delta;
    } else {
      const std::size_t rest = k - inst.b0.size();
      inst.b[rest / inst.brick_rows()][rest % inst.brick_rows()] += delta;
    }
  }
}

BigInt with_digits(Rng& rng, unsigned digits) {
  const BigInt lo = digits <= 1 ? BigInt(1) : pow10(digits - 1);
  return rng.uniform(lo, pow10(digits) - 1);
}

}  // namespace

FourBlockInstance random_ones_instance(std::uint64_t seed, const RandomShape& shape) {
  Rng rng(seed);
  FourBlockInstance inst;
  inst.n = 1 + rng.index(shape.max_n);
  const std::size_t t_a = 1 + rng.index(shape.max_t_a);
  const std::size_t t_b = rng.index(shape.max_t_b + 1);
  const std::size_t s_d = rng.index(shape.max_s_d + 1);
  inst.A = IntMatrix(1, t_a);
  for (std::size_t c = 0; c < t_a; ++c) inst.A(0, c) = 1;
  inst.B = random_matrix(rng, 1, t_b, shape.max_entry);
  inst.C = random_matrix(rng, s_d, t_b, shape.max_entry);
  inst.D = random_matrix(rng, s_d, t_a, shape.max_entry);
  random_box(rng, inst, shape);
  fill_rhs(rng, inst, shape.perturb_percent);
  return inst;
}

FourBlockInstance random_snf_instance(std::uint64_t seed, const RandomShape& shape) {
  Rng rng(seed);
  FourBlockInstance inst;
  inst.n = 1 + rng.index(shape.max_n);
  const std::size_t t_a = shape.max_t_a >= 3 ? 2 + rng.index(2) : 2;
  const std::size_t s_a = t_a - 1;
  const std::size_t t_b = 1 + rng.index(std::max<std::size_t>(shape.max_t_b, 1));
  const std::size_t s_d = rng.index(shape.max_s_d + 1);
  inst.A = random_eligible_a(rng, s_a, shape.max_entry);
  inst.B = random_matrix(rng, s_a, t_b, shape.max_entry);
  inst.C = random_matrix(rng, s_d, t_b, shape.max_entry);
  inst.D = random_matrix(rng, s_d, t_a, shape.max_entry);
  if (inst.B.is_zero() && inst.C.is_zero()) inst.B(0, 0) = 1;
  random_box(rng, inst, shape);
  fill_rhs(rng, inst, shape.perturb_percent);
  return inst;
}

FourBlockInstance random_nfold_snf_instance(std::uint64_t seed,
                                            const RandomShape& shape) {
  Rng rng(seed);
  FourBlockInstance inst;
  inst.n = 1 + rng.index(shape.max_n);
  const std::size_t t_a = shape.max_t_a >= 3 ? 2 + rng.index(2) : 2;
  const std::size_t s_a = t_a - 1;
  const std::size_t s_d = rng.index(shape.max_s_d + 1);
  inst.A = random_eligible_a(rng, s_a, shape.max_entry);
  inst.B = IntMatrix(s_a, 0);
  inst.C = IntMatrix(s_d, 0);
  inst.D = random_matrix(rng, s_d, t_a, shape.max_entry);
  random_box(rng, inst, shape);
  fill_rhs(rng, inst, shape.perturb_percent);
  return inst;
}

FourBlockInstance random_pair_instance(std::uint64_t seed, const RandomShape& shape) {
  Rng rng(seed);
  FourBlockInstance inst;
  inst.n = 1 + rng.index(shape.max_n);
  const std::size_t t_b = 1 + rng.index(std::max<std::size_t>(shape.max_t_b, 1));
  const std::size_t s_d = rng.index(shape.max_s_d + 1);
  inst.A = random_eligible_a(rng, 1, shape.max_entry);
  inst.B = random_matrix(rng, 1, t_b, shape.max_entry);
  inst.C = random_matrix(rng, s_d, t_b, shape.max_entry);
  inst.D = random_matrix(rng, s_d, 2, shape.max_entry);
  if (inst.B.is_zero() && inst.C.is_zero()) inst.B(0, 0) = 1;
  random_box(rng, inst, shape);
  fill_rhs(rng, inst, shape.perturb_percent);
  return inst;
}

FourBlockInstance nfold_linear_instance(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  FourBlockInstance inst;
  inst.n = n;
  inst.A = random_eligible_a(rng, 1, 9);
  inst.B = IntMatrix(1, 0);
  inst.C = IntMatrix(1, 0);
  inst.D = random_matrix(rng, 1, 2, 9);
  RandomShape shape;
  shape.max_bound = 50;
  shape.max_width = 20;
  shape.max_weight = 20;
  random_box(rng, inst, shape);
  fill_rhs(rng, inst, 0);
  return inst;
}

FourBlockInstance logdelta_ones_instance(std::size_t n, unsigned digits,
                                         std::uint64_t seed) {
  Rng rng(seed);
  FourBlockInstance inst;
  inst.n = n;
  inst.A = IntMatrix::from_rows({{1, 1}});
  inst.B = IntMatrix::from_rows({{with_digits(rng, digits)}});
  inst.C = IntMatrix::from_rows({{with_digits(rng, digits)}});
  inst.D = IntMatrix::from_rows({{1, 1}});
  for (std::size_t v = 0; v < inst.variable_count(); ++v) {
    inst.l.push_back(-with_digits(rng, digits));
    inst.u.push_back(with_digits(rng, digits));
    inst.w.push_back(rng.uniform(-with_digits(rng, digits), with_digits(rng, digits)));
  }
  fill_rhs(rng, inst, 0);
  return inst;
}

FourBlockInstance logdelta_nfold_instance(std::size_t n, unsigned digits,
                                          std::uint64_t seed) {
  Rng rng(seed);
  FourBlockInstance inst;
  inst.n = n;
  inst.A = IntMatrix::from_rows({{with_digits(rng, digits), -with_digits(rng, digits)}});
  inst.B = IntMatrix(1, 0);
  inst.C = IntMatrix(1, 0);
  inst.D = IntMatrix::from_rows({{with_digits(rng, digits), with_digits(rng, digits)}});
  for (std::size_t v = 0; v < inst.variable_count(); ++v) {
    inst.l.push_back(-with_digits(rng, digits));
    inst.u.push_back(with_digits(rng, digits));
    inst.w.push_back(rng.uniform(-with_digits(rng, digits), with_digits(rng, digits)));
  }
  fill_rhs(rng, inst, 0);
  return inst;
}

SubsetSumInstance random_subset_sum(std::uint64_t seed, std::size_t n,
                                    long max_beta) {
  Rng rng(seed);
  SubsetSumInstance s;
  BigInt total = 0, largest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s.betas.emplace_back(rng.small(1, max_beta));
    total += s.betas.back();
    if (s.betas.back() > largest) largest = s.betas.back();
  }
  if (rng.coin(50)) {
    s.target = 0;
    for (const BigInt& beta : s.betas) {
      if (rng.coin(50)) s.target += beta;
    }
  } else {
    s.target = rng.uniform(1, total < 1 ? BigInt(1) : total);
  }
  // Keep every beta admissible and the target at least 2.
  if (s.target < largest) s.target = largest;
  if (s.target < 2) s.target = 2;
  return s;
}

}  // namespace blockip
