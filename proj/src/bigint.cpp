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

#include "blockip/bigint.hpp"

#include <stdexcept>

namespace blockip {

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("floor_div: division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("ceil_div: division by zero");
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt floor_mod(const BigInt& value, const BigInt& modulus) {
  if (modulus == 0) throw std::domain_error("floor_mod: zero modulus");
  BigInt r;
  BigInt m = abs(modulus);
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt floor_of(const BigRational& q) {
  return floor_div(q.get_num(), q.get_den());
}

BigInt ceil_of(const BigRational& q) {
  return ceil_div(q.get_num(), q.get_den());
}

bool is_integral(const BigRational& q) { return q.get_den() == 1; }

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string to_decimal(const BigRational& value) { return value.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) +
                                "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("not a decimal integer: '" +
                                  std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

BigInt pow10(unsigned exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

BigInt dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace blockip
