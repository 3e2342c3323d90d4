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

#include "blockip/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace blockip {

using nlohmann::json;

namespace {

std::string summarize(const std::vector<ValidationIssue>& issues) {
  std::string msg = "invalid instance:";
  for (const ValidationIssue& issue : issues) {
    msg += " [";
    msg += to_string(issue.code);
    msg += "] ";
    msg += issue.message;
    msg += ";";
  }
  return msg;
}

bool names_infinity(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.erase(0, 1);
  return s == "inf" || s == "infinity";
}

// Marker thrown while decoding l/u entries that spell out an infinite bound.
struct InfiniteEntry {};

BigInt decode_int(const json& v, const char* field) {
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    if (names_infinity(s)) throw InfiniteEntry{};
    try {
      return parse_decimal(s);
    } catch (const std::invalid_argument&) {
      throw ParseError(std::string("field '") + field +
                       "': not a decimal integer: '" + s + "'");
    }
  }
  if (v.is_number_integer()) {
    return v.is_number_unsigned()
               ? BigInt(std::to_string(v.get<std::uint64_t>()), 10)
               : BigInt(std::to_string(v.get<std::int64_t>()), 10);
  }
  throw ParseError(std::string("field '") + field +
                   "': expected an integer (decimal string or number)");
}

IntVector decode_vector(const json& v, const char* field) {
  if (!v.is_array()) {
    throw ParseError(std::string("field '") + field + "': expected an array");
  }
  IntVector out;
  out.reserve(v.size());
  for (const json& e : v) out.push_back(decode_int(e, field));
  return out;
}

std::vector<IntVector> decode_rows(const json& v, const char* field) {
  if (!v.is_array()) {
    throw ParseError(std::string("field '") + field +
                     "': expected an array of rows");
  }
  std::vector<IntVector> rows;
  for (const json& r : v) rows.push_back(decode_vector(r, field));
  for (const IntVector& r : rows) {
    if (r.size() != rows.front().size()) {
      throw ParseError(std::string("field '") + field + "': ragged rows");
    }
  }
  return rows;
}

const json& require(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw ParseError(std::string("missing field '") + field + "'");
  }
  return *it;
}

std::size_t decode_count(const json& v, const char* field) {
  BigInt value = decode_int(v, field);
  if (value < 0 || !value.fits_ulong_p()) {
    throw ParseError(std::string("field '") + field +
                     "': expected a nonnegative count");
  }
  return value.get_ui();
}

json encode_vector(const IntVector& v) {
  json out = json::array();
  for (const BigInt& e : v) out.push_back(to_decimal(e));
  return out;
}

json encode_matrix(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(encode_vector(m.row(r)));
  return out;
}

// Decodes l or u, collecting infinite entries as validation issues.
IntVector decode_bounds(const json& v, const char* field,
                        std::vector<ValidationIssue>& issues) {
  if (!v.is_array()) {
    throw ParseError(std::string("field '") + field + "': expected an array");
  }
  IntVector out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    try {
      out.push_back(decode_int(v[j], field));
    } catch (const InfiniteEntry&) {
      issues.push_back({ValidationCode::kInfiniteBound,
                        std::string(field) + "[" + std::to_string(j) +
                            "] is infinite"});
      out.push_back(0);
    }
  }
  return out;
}

std::size_t row_width(const std::vector<IntVector>& rows) {
  return rows.empty() ? 0 : rows.front().size();
}

}  // namespace

InvalidInstance::InvalidInstance(std::vector<ValidationIssue> issues)
    : ParseError(summarize(issues)), issues_(std::move(issues)) {}

json instance_to_json(const FourBlockInstance& inst) {
  json j;
  j["n"] = inst.n;
  j["A"] = encode_matrix(inst.A);
  if (inst.head_width() > 0 || !inst.is_nfold()) {
    j["B"] = encode_matrix(inst.B);
    j["C"] = encode_matrix(inst.C);
  }
  j["D"] = encode_matrix(inst.D);
  j["b0"] = encode_vector(inst.b0);
  json b = json::array();
  for (const IntVector& bi : inst.b) b.push_back(encode_vector(bi));
  j["b"] = std::move(b);
  j["l"] = encode_vector(inst.l);
  j["u"] = encode_vector(inst.u);
  j["w"] = encode_vector(inst.w);
  if (inst.A.rows() == 0 && inst.D.rows() == 0) j["t_A"] = inst.brick_width();
  if (inst.B.rows() == 0 && inst.C.rows() == 0 && inst.head_width() > 0) {
    j["t_B"] = inst.head_width();
  }
  return j;
}

FourBlockInstance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  FourBlockInstance inst;
  inst.n = decode_count(require(j, "n"), "n");

  const auto A_rows = decode_rows(require(j, "A"), "A");
  const auto D_rows = decode_rows(require(j, "D"), "D");
  const bool has_B = j.contains("B");
  const bool has_C = j.contains("C");
  const auto B_rows = has_B ? decode_rows(j["B"], "B") : std::vector<IntVector>{};
  const auto C_rows = has_C ? decode_rows(j["C"], "C") : std::vector<IntVector>{};

  std::vector<ValidationIssue> issues;
  inst.b0 = decode_vector(require(j, "b0"), "b0");
  const json& b = require(j, "b");
  if (!b.is_array()) throw ParseError("field 'b': expected an array of vectors");
  for (const json& bi : b) inst.b.push_back(decode_vector(bi, "b"));
  inst.l = decode_bounds(require(j, "l"), "l", issues);
  inst.u = decode_bounds(require(j, "u"), "u", issues);
  inst.w = decode_vector(require(j, "w"), "w");

  // Widths come from the first matrix in each pair that has rows.
  std::size_t t_b = 0;
  if (!B_rows.empty()) {
    t_b = row_width(B_rows);
  } else if (!C_rows.empty()) {
    t_b = row_width(C_rows);
  } else if (j.contains("t_B")) {
    t_b = decode_count(j["t_B"], "t_B");
  }
  std::size_t t_a = 0;
  if (!A_rows.empty()) {
    t_a = row_width(A_rows);
  } else if (!D_rows.empty()) {
    t_a = row_width(D_rows);
  } else if (j.contains("t_A")) {
    t_a = decode_count(j["t_A"], "t_A");
  } else if (inst.n > 0 && inst.l.size() >= t_b) {
    t_a = (inst.l.size() - t_b) / inst.n;
  }

  const std::size_t s_a = A_rows.size();
  const std::size_t s_d = D_rows.size();
  inst.A = IntMatrix::from_rows(A_rows, t_a);
  inst.D = IntMatrix::from_rows(D_rows, t_a);
  inst.B = has_B ? IntMatrix::from_rows(B_rows, t_b) : IntMatrix(s_a, t_b);
  inst.C = has_C ? IntMatrix::from_rows(C_rows, t_b) : IntMatrix(s_d, t_b);

  for (ValidationIssue& issue : validate(inst)) issues.push_back(std::move(issue));
  if (!issues.empty()) throw InvalidInstance(std::move(issues));
  return inst;
}

bool is_generalized_json(const json& j) {
  return j.is_object() && j.contains("A_blocks");
}

json generalized_to_json(const GeneralizedNFoldInstance& g) {
  json j;
  j["kind"] = "generalized_nfold";
  j["n"] = g.n;
  json a = json::array(), d = json::array(), b = json::array();
  for (const IntMatrix& m : g.A_blocks) a.push_back(encode_matrix(m));
  for (const IntMatrix& m : g.D_blocks) d.push_back(encode_matrix(m));
  for (const IntVector& bi : g.b) b.push_back(encode_vector(bi));
  j["A_blocks"] = std::move(a);
  j["D_blocks"] = std::move(d);
  j["b0"] = encode_vector(g.b0);
  j["b"] = std::move(b);
  j["l"] = encode_vector(g.l);
  j["u"] = encode_vector(g.u);
  j["w"] = encode_vector(g.w);
  return j;
}

GeneralizedNFoldInstance generalized_from_json(const json& j) {
  if (!is_generalized_json(j)) {
    throw ParseError("generalized instance: expected an object with A_blocks");
  }
  GeneralizedNFoldInstance g;
  g.n = decode_count(require(j, "n"), "n");
  std::vector<ValidationIssue> issues;
  for (const json& m : require(j, "A_blocks")) {
    g.A_blocks.push_back(IntMatrix::from_rows(decode_rows(m, "A_blocks")));
  }
  for (const json& m : require(j, "D_blocks")) {
    g.D_blocks.push_back(IntMatrix::from_rows(decode_rows(m, "D_blocks")));
  }
  g.b0 = decode_vector(require(j, "b0"), "b0");
  for (const json& bi : require(j, "b")) g.b.push_back(decode_vector(bi, "b"));
  g.l = decode_bounds(require(j, "l"), "l", issues);
  g.u = decode_bounds(require(j, "u"), "u", issues);
  g.w = decode_vector(require(j, "w"), "w");
  for (ValidationIssue& issue : validate(g)) issues.push_back(std::move(issue));
  if (!issues.empty()) throw InvalidInstance(std::move(issues));
  return g;
}

json solution_to_json(const Solution& s) {
  json j;
  j["x"] = encode_vector(s.x);
  j["objective"] = to_decimal(s.objective);
  j["solver_tag"] = std::string(to_string(s.solver));
  return j;
}

Solution solution_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("solution: expected a JSON object");
  Solution s;
  s.x = decode_vector(require(j, "x"), "x");
  s.objective = decode_int(require(j, "objective"), "objective");
  const json& tag = require(j, "solver_tag");
  if (!tag.is_string()) throw ParseError("field 'solver_tag': expected a string");
  auto parsed = parse_solver_tag(tag.get<std::string>());
  if (!parsed) throw ParseError("field 'solver_tag': unknown solver tag");
  s.solver = *parsed;
  return s;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace blockip
