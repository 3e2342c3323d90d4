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

#include "blockip/intlin.hpp"

#include <algorithm>
#include <utility>

namespace blockip {

BezoutSolution extended_gcd(const BigInt& lambda, const BigInt& mu) {
  if (lambda == 0 && mu == 0) throw BothZero();

  // Iterative Euclid on |lambda|, |mu| keeping coefficient pairs.
  BigInt old_r = abs(lambda), r = abs(mu);
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }

  BezoutSolution out;
  out.g = old_r;
  out.x = sgn(lambda) < 0 ? BigInt(-old_s) : old_s;
  out.y = sgn(mu) < 0 ? BigInt(-old_t) : old_t;
  out.step_x = mu / out.g;
  out.step_y = lambda / out.g;
  return out;
}

std::optional<BezoutSolution> solve_two_var_diophantine(const BigInt& lambda,
                                                        const BigInt& mu,
                                                        const BigInt& c) {
  BezoutSolution base = extended_gcd(lambda, mu);
  if (!mpz_divisible_p(c.get_mpz_t(), base.g.get_mpz_t())) return std::nullopt;
  BigInt scale = c / base.g;
  base.x *= scale;
  base.y *= scale;
  return base;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] += factor * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src,
             const BigInt& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += factor * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src,
             const BigInt& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += factor * m(r, src);
}

BigInt trunc_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SnfDecomposition smith_decompose(const IntMatrix& A) {
  const std::size_t s = A.rows();
  const std::size_t t = A.cols();
  IntMatrix M = A;
  IntMatrix U = IntMatrix::identity(s);
  IntMatrix V = IntMatrix::identity(t);
  std::size_t rank = 0;

  for (std::size_t k = 0; k < std::min(s, t); ++k) {
    bool found_pivot = true;
    for (;;) {
      // Minimum nonzero |entry| in the trailing block; ties by row, then col.
      std::size_t pr = s, pc = t;
      for (std::size_t i = k; i < s; ++i) {
        for (std::size_t j = k; j < t; ++j) {
          if (M(i, j) == 0) continue;
          if (pr == s || mpz_cmpabs(M(i, j).get_mpz_t(), M(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == s) {
        found_pivot = false;
        break;
      }
      swap_rows(M, k, pr);
      swap_rows(U, k, pr);
      swap_cols(M, k, pc);
      swap_cols(V, k, pc);

      bool clean = true;
      for (std::size_t i = k + 1; i < s; ++i) {
        if (M(i, k) == 0) continue;
        BigInt q = -trunc_quotient(M(i, k), M(k, k));
        add_row(M, i, k, q);
        add_row(U, i, k, q);
        if (M(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < t; ++j) {
        if (M(k, j) == 0) continue;
        BigInt q = -trunc_quotient(M(k, j), M(k, k));
        add_col(M, j, k, q);
        add_col(V, j, k, q);
        if (M(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot isolated; enforce that it divides the rest of the block.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < s && divides_all; ++i) {
        for (std::size_t j = k + 1; j < t; ++j) {
          if (!mpz_divisible_p(M(i, j).get_mpz_t(), M(k, k).get_mpz_t())) {
            add_row(M, k, i, BigInt(1));
            add_row(U, k, i, BigInt(1));
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (!found_pivot) break;
    if (sgn(M(k, k)) < 0) {
      for (std::size_t c = 0; c < t; ++c) M(k, c) = -M(k, c);
      for (std::size_t c = 0; c < s; ++c) U(k, c) = -U(k, c);
    }
    rank = k + 1;
  }
  return SnfDecomposition{std::move(U), std::move(M), std::move(V), rank};
}

SnfDecomposition smith_normal_form(const IntMatrix& A) {
  if (A.is_zero()) throw ZeroMatrix();
  return smith_decompose(A);
}

std::size_t integer_rank(const IntMatrix& A) {
  if (A.is_zero()) return 0;
  return smith_decompose(A).rank;
}

BigInt bareiss_determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) {
    throw DimensionMismatch("bareiss_determinant: matrix is not square");
  }
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix M = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && M(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      swap_rows(M, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M(i, j) = std::move(v);
      }
    }
    prev = M(k, k);
  }
  BigInt det = M(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

bool is_unimodular(const IntMatrix& M) {
  if (M.rows() != M.cols()) return false;
  return abs(bareiss_determinant(M)) == 1;
}

}  // namespace blockip
