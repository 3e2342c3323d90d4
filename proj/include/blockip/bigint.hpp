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

// Arbitrary-precision integer and rational types used throughout blockip.

#ifndef BLOCKIP_BIGINT_HPP_
#define BLOCKIP_BIGINT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace blockip {

using BigInt = mpz_class;
using BigRational = mpq_class;
using IntVector = std::vector<BigInt>;
using RatVector = std::vector<BigRational>;

// Rounds toward negative infinity. `den` must be nonzero.
BigInt floor_div(const BigInt& num, const BigInt& den);
// Rounds toward positive infinity. `den` must be nonzero.
BigInt ceil_div(const BigInt& num, const BigInt& den);
// Remainder in [0, |modulus|-1]. `modulus` must be nonzero.
BigInt floor_mod(const BigInt& value, const BigInt& modulus);

BigInt floor_of(const BigRational& q);
BigInt ceil_of(const BigRational& q);
bool is_integral(const BigRational& q);

std::string to_decimal(const BigInt& value);
std::string to_decimal(const BigRational& value);

// Parses an optionally signed decimal integer. Throws std::invalid_argument
// on anything else (including empty strings and embedded whitespace).
BigInt parse_decimal(std::string_view text);

// 10^exponent.
BigInt pow10(unsigned exponent);

// Inner product of equally sized vectors.
BigInt dot(const IntVector& a, const IntVector& b);

}  // namespace blockip

#endif  // BLOCKIP_BIGINT_HPP_
