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

#ifndef BLOCKIP_ERRORS_HPP_
#define BLOCKIP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace blockip {

// Caller handed an argument outside an operation's documented domain
// (wrong structure class, mismatched dimensions, malformed problem).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vector/matrix sizes disagree with the instance they are applied to.
class DimensionMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An equivalence the algorithms rely on was observed to fail. Never expected
// on valid input; raised instead of returning a wrong answer.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An enumeration or dynamic program would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace blockip

#endif  // BLOCKIP_ERRORS_HPP_
