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

#include "blockip/dispatch.hpp"

#include <chrono>

#include "blockip/oracle.hpp"
#include "blockip/solver_4block_snf.hpp"
#include "blockip/solver_nfold_snf.hpp"
#include "blockip/solver_ones.hpp"

namespace blockip {

namespace {

std::string unsupported_message(StructureClass cls) {
  switch (cls) {
    case StructureClass::kHardTaGeSaPlus2:
      return "t_A >= s_A+2: NP-hard class (already for n-fold with one row); "
             "use --solver bruteforce for small instances";
    case StructureClass::kGeneral:
      return "structure class General: t_A <= s_A or rank(A) < s_A; no "
             "dedicated solver, use --solver bruteforce";
    default:
      return "no solver for this structure class";
  }
}

std::optional<SolverChoice> auto_choice(StructureClass cls) {
  switch (cls) {
    case StructureClass::kAllOnesRow:
      return SolverChoice::kOnes;
    case StructureClass::kNFoldSnfEligible:
      return SolverChoice::kNfold;
    case StructureClass::kSnfEligible:
      return SolverChoice::kFourBlock;
    default:
      return std::nullopt;
  }
}

void finish(RunReport& r, bool feasible, Solution solution, SolverTag tag) {
  r.solver = tag;
  if (feasible) {
    r.status = RunStatus::kOptimal;
    r.solution = std::move(solution);
  } else {
    r.status = RunStatus::kInfeasible;
  }
}

}  // namespace

std::optional<SolverChoice> parse_solver_choice(std::string_view text) {
  if (text == "auto") return SolverChoice::kAuto;
  if (text == "ones") return SolverChoice::kOnes;
  if (text == "nfold") return SolverChoice::kNfold;
  if (text == "fourblock") return SolverChoice::kFourBlock;
  if (text == "bruteforce") return SolverChoice::kBruteforce;
  return std::nullopt;
}

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kOptimal:
      return "Optimal";
    case RunStatus::kInfeasible:
      return "Infeasible";
    case RunStatus::kUnsupported:
      return "Unsupported";
  }
  return "?";
}

RunReport solve_instance(const FourBlockInstance& instance,
                         const SolveOptions& options) {
  RunReport r;
  r.structure = classify(instance);
  const auto start = std::chrono::steady_clock::now();
  std::optional<SolverChoice> choice = options.solver;
  if (options.solver == SolverChoice::kAuto) choice = auto_choice(r.structure);
  if (!choice) {
    r.message = unsupported_message(r.structure);
    return r;
  }
  try {
    switch (*choice) {
      case SolverChoice::kOnes: {
        OnesReport rep = solve_ones(instance);
        r.nodes = rep.stats.nodes;
        finish(r, rep.feasible, std::move(rep.solution), SolverTag::kOnes);
        break;
      }
      case SolverChoice::kNfold: {
        NfoldSnfReport rep = solve_nfold_snf(instance);
        if (!rep.feasible) r.message = std::string(to_string(rep.reason));
        finish(r, rep.feasible, std::move(rep.solution), SolverTag::kNfoldSnf);
        break;
      }
      case SolverChoice::kFourBlock: {
        FourBlockOptions fo;
        fo.threads = options.threads;
        FourBlockReport rep = solve_4block_snf(instance, fo);
        r.cells = rep.cells;
        r.nodes = rep.mip_nodes;
        if (!rep.feasible) r.message = rep.reason;
        finish(r, rep.feasible, std::move(rep.solution), SolverTag::kFourBlockSnf);
        break;
      }
      case SolverChoice::kBruteforce: {
        OracleResult rep = enumerate_optimum(instance, OracleBudget{options.budget});
        r.nodes = rep.nodes;
        finish(r, rep.feasible, std::move(rep.solution), SolverTag::kBruteforce);
        break;
      }
      case SolverChoice::kAuto:
        break;
    }
  } catch (const BudgetExceeded& e) {
    r.status = RunStatus::kUnsupported;
    r.message = e.what();
  } catch (const PreconditionError& e) {
    r.status = RunStatus::kUnsupported;
    r.message = e.what();
  }
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json report_to_json(const RunReport& r) {
  nlohmann::json j;
  j["structure"] = std::string(to_string(r.structure));
  j["solver"] = r.solver ? nlohmann::json(std::string(to_string(*r.solver)))
                         : nlohmann::json(nullptr);
  j["status"] = std::string(to_string(r.status));
  j["objective"] = r.solution ? nlohmann::json(to_decimal(r.solution->objective))
                              : nlohmann::json(nullptr);
  j["wall_seconds"] = r.wall_seconds;
  j["cells"] = r.cells;
  j["nodes"] = r.nodes;
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

}  // namespace blockip
