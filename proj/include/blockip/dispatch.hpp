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

// Routes an instance to a solver by structure class (or by explicit choice)
// and records what happened.

#ifndef BLOCKIP_DISPATCH_HPP_
#define BLOCKIP_DISPATCH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "blockip/bigint.hpp"
#include "blockip/model.hpp"
#include "json.hpp"

namespace blockip {

enum class SolverChoice { kAuto, kOnes, kNfold, kFourBlock, kBruteforce };

std::optional<SolverChoice> parse_solver_choice(std::string_view text);

struct SolveOptions {
  SolverChoice solver = SolverChoice::kAuto;
  std::size_t threads = 1;
  BigInt budget = 10'000'000;  // lattice points for the brute-force oracle
};

enum class RunStatus { kOptimal, kInfeasible, kUnsupported };

std::string_view to_string(RunStatus status);

struct RunReport {
  StructureClass structure = StructureClass::kGeneral;
  std::optional<SolverTag> solver;
  RunStatus status = RunStatus::kUnsupported;
  std::optional<Solution> solution;  // set iff Optimal
  double wall_seconds = 0;
  std::size_t cells = 0;
  std::size_t nodes = 0;
  std::string message;
};

// Never throws for structural reasons: an unsuitable class or an exhausted
// budget yields an Unsupported report.
RunReport solve_instance(const FourBlockInstance& instance,
                         const SolveOptions& options = {});

nlohmann::json report_to_json(const RunReport& report);

}  // namespace blockip

#endif  // BLOCKIP_DISPATCH_HPP_
