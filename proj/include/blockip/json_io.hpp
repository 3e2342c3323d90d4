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

// JSON encoding of instances and solutions. Every integer is written as a
// decimal string so that values beyond 64 bits survive unchanged; parsers
// also accept plain JSON integers.
//
// Instance: {"n", "A", "B", "C", "D", "b0", "b", "l", "u", "w"}
//   matrices are arrays of rows, "b" is an array of n vectors, "l"/"u"/"w"
//   are flat brick-major arrays. "B" and "C" may be omitted (n-fold). The
//   optional integers "t_A"/"t_B" disambiguate widths when the matrices
//   that would carry them have no rows.
// Solution: {"x", "objective", "solver_tag"}

#ifndef BLOCKIP_JSON_IO_HPP_
#define BLOCKIP_JSON_IO_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "blockip/model.hpp"
#include "blockip/reductions.hpp"
#include "json.hpp"

namespace blockip {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parsed text describes an instance that fails validation.
class InvalidInstance : public ParseError {
 public:
  explicit InvalidInstance(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

nlohmann::json instance_to_json(const FourBlockInstance& instance);
// Throws ParseError on malformed JSON and InvalidInstance when the decoded
// instance is not well formed (including infinite bounds such as "inf").
FourBlockInstance instance_from_json(const nlohmann::json& j);

nlohmann::json generalized_to_json(const GeneralizedNFoldInstance& instance);
GeneralizedNFoldInstance generalized_from_json(const nlohmann::json& j);
bool is_generalized_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const Solution& solution);
Solution solution_from_json(const nlohmann::json& j);

std::string dump_json(const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace blockip

#endif  // BLOCKIP_JSON_IO_HPP_
