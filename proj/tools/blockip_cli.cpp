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

// blockip: solve, verify, generate, oracle and bench front end.
//
// Exit codes: 0 ok, 2 parse or bad parameters, 3 unsupported, 4 infeasible,
// 5 verification failed.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blockip/dispatch.hpp"
#include "blockip/generators.hpp"
#include "blockip/json_io.hpp"
#include "blockip/oracle.hpp"
#include "blockip/reductions.hpp"
#include "blockip/solver_nfold_snf.hpp"
#include "blockip/solver_ones.hpp"

namespace {

using blockip::BigInt;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitVerify = 5;

class BadParams : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_for(blockip::RunStatus status) {
  switch (status) {
    case blockip::RunStatus::kOptimal:
      return kExitOk;
    case blockip::RunStatus::kInfeasible:
      return kExitInfeasible;
    case blockip::RunStatus::kUnsupported:
      return kExitUnsupported;
  }
  return kExitUnsupported;
}

void emit(const json& j, const std::string& out) {
  const std::string text = blockip::dump_json(j);
  if (out.empty() || out == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    blockip::write_text_file(out, text);
  }
}

BigInt parse_big(const std::string& text, const std::string& what) {
  try {
    return blockip::parse_decimal(text);
  } catch (const std::exception&) {
    throw BadParams(what + ": not a decimal integer: '" + text + "'");
  }
}

BigInt parse_budget(const std::string& text) {
  const BigInt b = parse_big(text, "--budget");
  if (b < 1) throw BadParams("--budget must be >= 1");
  return b;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

// ---- solve / oracle ------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string solver = "auto";
  std::string format = "json";
  std::size_t threads = 1;
  std::string budget = "10000000";
  std::string out;
};

json generalized_report(const blockip::GeneralizedNFoldInstance& g,
                        const BigInt& budget, std::optional<blockip::Solution>& sol,
                        int& code) {
  json j;
  j["structure"] = "GeneralizedNFold";
  j["solver"] = "bruteforce";
  j["cells"] = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    const blockip::OracleResult r = blockip::enumerate_optimum(g, {budget});
    j["nodes"] = r.nodes;
    if (r.feasible) {
      j["status"] = "Optimal";
      j["objective"] = blockip::to_decimal(r.solution.objective);
      sol = r.solution;
      code = kExitOk;
    } else {
      j["status"] = "Infeasible";
      j["objective"] = nullptr;
      code = kExitInfeasible;
    }
  } catch (const blockip::BudgetExceeded& e) {
    j["status"] = "Unsupported";
    j["objective"] = nullptr;
    j["nodes"] = 0;
    j["message"] = e.what();
    code = kExitUnsupported;
  }
  j["wall_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return j;
}

int run_solve(const SolveArgs& a, bool oracle_only) {
  if (a.format != "json") throw BadParams("--format: only json is supported");
  const auto choice = oracle_only ? std::optional(blockip::SolverChoice::kBruteforce)
                                  : blockip::parse_solver_choice(a.solver);
  if (!choice) throw BadParams("--solver: unknown solver '" + a.solver + "'");
  const BigInt budget = parse_budget(a.budget);

  const json input = blockip::read_json_file(a.instance);
  json report;
  std::optional<blockip::Solution> solution;
  int code = kExitOk;
  if (blockip::is_generalized_json(input)) {
    const auto g = blockip::generalized_from_json(input);
    if (*choice != blockip::SolverChoice::kBruteforce &&
        *choice != blockip::SolverChoice::kAuto) {
      throw BadParams("generalized instances only support --solver bruteforce");
    }
    if (*choice == blockip::SolverChoice::kAuto) {
      report["structure"] = "GeneralizedNFold";
      report["solver"] = nullptr;
      report["status"] = "Unsupported";
      report["objective"] = nullptr;
      report["message"] =
          "generalized n-fold instance (per-brick blocks): NP-hard class; use "
          "--solver bruteforce for small instances";
      emit(report, "");
      return kExitUnsupported;
    }
    report = generalized_report(g, budget, solution, code);
  } else {
    const auto inst = blockip::instance_from_json(input);
    blockip::SolveOptions opt;
    opt.solver = *choice;
    opt.threads = a.threads == 0 ? 1 : a.threads;
    opt.budget = budget;
    blockip::RunReport r = blockip::solve_instance(inst, opt);
    report = blockip::report_to_json(r);
    solution = r.solution;
    code = exit_for(r.status);
  }
  if (solution) {
    if (!a.out.empty()) {
      emit(blockip::solution_to_json(*solution), a.out);
    } else {
      report["solution"] = blockip::solution_to_json(*solution);
    }
  }
  emit(report, "");
  if (code == kExitUnsupported && report.contains("message")) {
    std::cerr << "unsupported: " << report["message"].get<std::string>() << '\n';
  }
  return code;
}

// ---- verify --------------------------------------------------------------

int run_verify(const std::string& instance_path, const std::string& solution_path) {
  const json input = blockip::read_json_file(instance_path);
  json sj = blockip::read_json_file(solution_path);
  // A solve report with an embedded solution is accepted too.
  if (sj.is_object() && sj.contains("solution") && !sj.contains("x")) {
    sj = sj["solution"];
  }
  const blockip::Solution sol = blockip::solution_from_json(sj);

  BigInt objective;
  if (blockip::is_generalized_json(input)) {
    const auto g = blockip::generalized_from_json(input);
    if (sol.x.size() != g.variable_count()) {
      std::cout << "FAIL: x has " << sol.x.size() << " entries, instance has "
                << g.variable_count() << '\n';
      return kExitVerify;
    }
    if (!blockip::is_feasible(g, sol.x)) {
      std::cout << "FAIL: solution violates a constraint\n";
      return kExitVerify;
    }
    objective = blockip::dot(g.w, sol.x);
  } else {
    const auto inst = blockip::instance_from_json(input);
    if (sol.x.size() != inst.variable_count()) {
      std::cout << "FAIL: x has " << sol.x.size() << " entries, instance has "
                << inst.variable_count() << '\n';
      return kExitVerify;
    }
    const blockip::Evaluation ev = blockip::evaluate(inst, sol.x);
    if (!ev.feasible) {
      std::cout << "FAIL: " << ev.violations.front().describe() << '\n';
      return kExitVerify;
    }
    objective = ev.objective;
  }
  if (objective != sol.objective) {
    std::cout << "FAIL: objective mismatch: solution says "
              << blockip::to_decimal(sol.objective) << ", w.x = "
              << blockip::to_decimal(objective) << '\n';
    return kExitVerify;
  }
  std::cout << "OK objective " << blockip::to_decimal(objective) << '\n';
  return kExitOk;
}

// ---- generate ------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::uint64_t seed = 1;
  std::string betas;
  std::string target;
  std::size_t n = 6;
  long max_beta = 30;
  std::size_t k = 0;
  std::string out;
};

blockip::SubsetSumInstance subset_sum_params(const GenerateArgs& a) {
  if (a.betas.empty() != a.target.empty()) {
    throw BadParams("--betas and --target must be given together");
  }
  if (a.betas.empty()) {
    if (a.n == 0) throw BadParams("--n must be >= 1");
    if (a.max_beta < 1) throw BadParams("--max-beta must be >= 1");
    return blockip::random_subset_sum(a.seed, a.n, a.max_beta);
  }
  blockip::SubsetSumInstance s;
  for (const std::string& b : split_list(a.betas)) s.betas.push_back(parse_big(b, "--betas"));
  if (s.betas.empty()) throw BadParams("--betas is empty");
  s.target = parse_big(a.target, "--target");
  return s;
}

int run_generate(const GenerateArgs& a) {
  json instance;
  std::optional<bool> answer;
  std::size_t n = 0;
  try {
    if (a.kind == "random-ones" || a.kind == "random-snf") {
      const auto inst = a.kind == "random-ones" ? blockip::random_ones_instance(a.seed)
                                                : blockip::random_snf_instance(a.seed);
      instance = blockip::instance_to_json(inst);
    } else if (a.kind == "theorem1" || a.kind == "theorem2a" ||
               a.kind == "theorem2b" || a.kind == "scheduling") {
      const blockip::SubsetSumInstance s = subset_sum_params(a);
      n = s.betas.size();
      if (a.kind == "theorem1") {
        instance = blockip::instance_to_json(blockip::encode_subset_sum_nfold(s).general());
      } else if (a.kind == "theorem2a") {
        instance = blockip::generalized_to_json(blockip::encode_subset_sum_weighted_coupling(s));
      } else if (a.kind == "theorem2b") {
        instance = blockip::generalized_to_json(blockip::encode_subset_sum_varying_blocks(s));
      } else {
        instance = blockip::instance_to_json(
            blockip::encode_cardinality_scheduling(s, a.k).general());
      }
      if (n <= 25) {
        answer = a.kind == "scheduling" ? blockip::subset_sum_with_count(s, n - a.k)
                                        : blockip::subset_sum_dp(s);
      }
    } else {
      throw BadParams("unknown kind '" + a.kind +
                      "' (theorem1, theorem2a, theorem2b, scheduling, random-ones, "
                      "random-snf)");
    }
  } catch (const blockip::PreconditionError& e) {
    throw BadParams(e.what());
  }
  emit(instance, a.out);
  if (answer && !a.out.empty() && a.out != "-") {
    json side;
    side["kind"] = a.kind;
    side["feasible"] = *answer;
    side["oracle"] = "subset_sum_dp";
    emit(side, a.out + ".answer.json");
  }
  return kExitOk;
}

// ---- bench ---------------------------------------------------------------

struct BenchArgs {
  std::string suite;
  std::string sizes;
  std::string digits;
  std::size_t n = 100;
  std::uint64_t seed = 1;
};

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::size_t> parse_sizes(const std::string& text,
                                     std::vector<std::size_t> fallback) {
  if (text.empty()) return fallback;
  std::vector<std::size_t> out;
  for (const std::string& p : split_list(text)) {
    const BigInt v = parse_big(p, "list entry");
    if (v < 1 || !v.fits_ulong_p()) throw BadParams("list entries must be positive");
    out.push_back(v.get_ui());
  }
  if (out.empty()) throw BadParams("empty list");
  return out;
}

int run_bench(const BenchArgs& a) {
  if (a.suite == "nfold-linear") {
    std::cout << "suite,n,solver,status,wall_seconds\n";
    for (std::size_t n : parse_sizes(a.sizes, {1000, 10000, 100000})) {
      const auto inst = blockip::nfold_linear_instance(n, a.seed);
      bool feasible = false;
      const double t = seconds([&] { feasible = blockip::solve_nfold_snf(inst).feasible; });
      std::cout << "nfold-linear," << n << ",nfold_snf,"
                << (feasible ? "Optimal" : "Infeasible") << ',' << t << '\n';
    }
    return kExitOk;
  }
  if (a.suite == "logdelta") {
    std::cout << "suite,n,digits,solver,status,wall_seconds\n";
    for (std::size_t d : parse_sizes(a.digits, {10, 20, 40})) {
      const unsigned digits = static_cast<unsigned>(d);
      const auto ones = blockip::logdelta_ones_instance(a.n, digits, a.seed);
      const auto nfold = blockip::logdelta_nfold_instance(a.n, digits, a.seed);
      bool f1 = false, f2 = false;
      const double t1 = seconds([&] { f1 = blockip::solve_ones(ones).feasible; });
      const double t2 = seconds([&] { f2 = blockip::solve_nfold_snf(nfold).feasible; });
      std::string brute = "Completed";
      const double t3 = seconds([&] {
        try {
          blockip::enumerate_optimum(nfold);
        } catch (const blockip::BudgetExceeded&) {
          brute = "BudgetExceeded";
        }
      });
      std::cout << "logdelta," << a.n << ',' << digits << ",ones,"
                << (f1 ? "Optimal" : "Infeasible") << ',' << t1 << '\n'
                << "logdelta," << a.n << ',' << digits << ",nfold_snf,"
                << (f2 ? "Optimal" : "Infeasible") << ',' << t2 << '\n'
                << "logdelta," << a.n << ',' << digits << ",bruteforce," << brute
                << ',' << t3 << '\n';
    }
    return kExitOk;
  }
  throw BadParams(a.suite.empty() ? "bench: empty suite name"
                                  : "bench: unknown suite '" + a.suite +
                                        "' (nfold-linear, logdelta)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blockip: exact solvers for 4-block n-fold integer programs"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("instance", solve_args.instance)->required();
  solve->add_option("--solver", solve_args.solver,
                    "auto, ones, nfold, fourblock or bruteforce");
  solve->add_option("--format", solve_args.format, "output format (json)");
  solve->add_option("--threads", solve_args.threads, "concurrent cell solves");
  solve->add_option("--budget", solve_args.budget, "lattice points for bruteforce");
  solve->add_option("--out", solve_args.out, "write the solution file here");

  SolveArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive enumeration of an instance");
  oracle->add_option("instance", oracle_args.instance)->required();
  oracle->add_option("--format", oracle_args.format, "output format (json)");
  oracle->add_option("--budget", oracle_args.budget, "lattice points");
  oracle->add_option("--out", oracle_args.out, "write the solution file here");

  std::string verify_instance, verify_solution;
  auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
  verify->add_option("instance", verify_instance)->required();
  verify->add_option("solution", verify_solution)->required();

  GenerateArgs gen_args;
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate->add_option("kind", gen_args.kind,
                       "theorem1, theorem2a, theorem2b, scheduling, random-ones, "
                       "random-snf")
      ->required();
  generate->add_option("--seed", gen_args.seed);
  generate->add_option("--betas", gen_args.betas, "comma-separated betas");
  generate->add_option("--target", gen_args.target, "subset-sum target");
  generate->add_option("--n", gen_args.n, "number of betas when drawn at random");
  generate->add_option("--max-beta", gen_args.max_beta);
  generate->add_option("--k", gen_args.k, "scheduling: machines taking a type-3 job");
  generate->add_option("--out", gen_args.out, "instance path (sidecar at <out>.answer.json)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Timing table (CSV)");
  bench->add_option("suite", bench_args.suite, "nfold-linear or logdelta");
  bench->add_option("--sizes", bench_args.sizes, "nfold-linear: comma-separated n");
  bench->add_option("--digits", bench_args.digits, "logdelta: comma-separated digits");
  bench->add_option("--n", bench_args.n, "logdelta: number of bricks");
  bench->add_option("--seed", bench_args.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*solve) return run_solve(solve_args, false);
    if (*oracle) return run_solve(oracle_args, true);
    if (*verify) return run_verify(verify_instance, verify_solution);
    if (*generate) return run_generate(gen_args);
    if (*bench) return run_bench(bench_args);
  } catch (const BadParams& e) {
    std::cerr << "bad parameters: " << e.what() << '\n';
    return kExitParse;
  } catch (const blockip::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const blockip::PreconditionError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitParse;
}
