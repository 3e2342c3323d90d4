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

// Integer linear algebra: Bezout identities, two-variable Diophantine
// equations, Smith normal form with unimodular transforms, rank and
// fraction-free determinants.

#ifndef BLOCKIP_INTLIN_HPP_
#define BLOCKIP_INTLIN_HPP_

#include <cstddef>
#include <optional>

#include "blockip/bigint.hpp"
#include "blockip/errors.hpp"
#include "blockip/model.hpp"

namespace blockip {

// One solution (x, y) of lambda*x + mu*y = g together with the step of the
// full solution family
//
//   (x + k*step_x, y - k*step_y),  k in Z,  step_x = mu/g, step_y = lambda/g.
struct BezoutSolution {
  BigInt x;
  BigInt y;
  BigInt step_x;
  BigInt step_y;
  BigInt g;

  BigInt x_at(const BigInt& k) const { return x + k * step_x; }
  BigInt y_at(const BigInt& k) const { return y - k * step_y; }
};

class BothZero : public PreconditionError {
 public:
  BothZero() : PreconditionError("extended_gcd: both arguments are zero") {}
};

class ZeroMatrix : public PreconditionError {
 public:
  ZeroMatrix() : PreconditionError("smith_normal_form: matrix has no nonzero entry") {}
};

// g = gcd(lambda, mu) > 0 with lambda*x + mu*y = g.
BezoutSolution extended_gcd(const BigInt& lambda, const BigInt& mu);

// Solutions of lambda*x + mu*y = c; nullopt when gcd(lambda, mu) does not
// divide c. The particular solution is the Bezout one scaled by c/g; `g`
// still holds the gcd.
std::optional<BezoutSolution> solve_two_var_diophantine(const BigInt& lambda,
                                                        const BigInt& mu,
                                                        const BigInt& c);

// U * A * V = S with |det U| = |det V| = 1 and S = diag(alpha_1..alpha_h, 0..)
// where alpha_i > 0 and alpha_i | alpha_{i+1}.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::size_t rank = 0;

  const BigInt& alpha(std::size_t i) const { return S(i, i); }
};

// Throws ZeroMatrix when A has no nonzero entry. Deterministic.
SnfDecomposition smith_normal_form(const IntMatrix& A);

// Same decomposition but total: a zero (or empty) matrix yields U = I,
// V = I, S = 0 and rank 0.
SnfDecomposition smith_decompose(const IntMatrix& A);

// Rank over the rationals (number of nonzero Smith invariants).
std::size_t integer_rank(const IntMatrix& A);

// Fraction-free (Bareiss) determinant of a square matrix; 1 for 0x0.
BigInt bareiss_determinant(const IntMatrix& M);

bool is_unimodular(const IntMatrix& M);

}  // namespace blockip

#endif  // BLOCKIP_INTLIN_HPP_
