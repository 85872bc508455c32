// Copyright 2026 The Authors.
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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "assortment/analysis.h"
#include "assortment/experiments.h"
#include "assortment/instance_io.h"
#include "assortment/parallel.h"
#include "assortment/reference.h"
#include "assortment/report.h"

namespace assortment::cli {
namespace {

using nlohmann::json;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return kExitUsage;
    case ErrorCode::kIo: return kExitIo;
    case ErrorCode::kAssertion: return kExitAssertion;
    default: return kExitValidation;
  }
}

void PrintError(std::ostream& err, std::string_view code,
                const std::string& message, int exit_code) {
  json doc = {{"error",
               {{"code", code}, {"message", message}, {"exit_code", exit_code}}}};
  err << doc.dump() << "\n";
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadTextFile(path));
}

int ResolveCapacity(const Instance& instance, std::optional<int> flag) {
  if (flag) return *flag;
  if (instance.capacity()) return *instance.capacity();
  throw Error(ErrorCode::kUsage,
              "--C is required when the instance has no capacity");
}

struct GenOptions {
  GeneratorSpec spec;
  std::optional<int> capacity;
  std::string out;
};

struct SolveOptions {
  std::string instance;
  int seed_size = 0;
  std::optional<int> capacity;
  std::optional<int> budget;
  std::string noise_mode = "none";
  double eps = 0.0;
  std::uint64_t noise_seed = 0;
  bool trace = false;
  bool exact = false;
  bool serial = false;
  std::string out;
};

struct ExactOptions {
  std::string instance;
  std::optional<int> capacity;
  std::string out;
};

struct BenchOptions {
  std::string suite = "grid";
  int seeds = 50;
  std::uint64_t base_seed = 3;
  std::string out;
};

struct VerifyOptions {
  std::string report;
  std::string out;
};

int RunGen(const GenOptions& o, std::ostream& out) {
  GeneratorSpec spec = o.spec;
  spec.capacity = o.capacity;
  const Instance instance = GenerateInstance(spec);
  json metadata = {{"generator",
                    {{"N", spec.n},
                     {"seed", spec.seed},
                     {"weight_distribution", "log-uniform"},
                     {"weight_lo", spec.weight_lo},
                     {"weight_hi", spec.weight_hi},
                     {"price_distribution", "uniform"},
                     {"price_lo", spec.price_lo},
                     {"price_hi", spec.price_hi}}}};
  Emit(o.out, SerializeInstance(instance, metadata), out);
  return kExitOk;
}

int RunSolve(const SolveOptions& o, std::ostream& out) {
  const Instance instance = LoadInstance(o.instance);
  RunConfig config;
  config.greedy.seed_size = o.seed_size;
  config.greedy.capacity = ResolveCapacity(instance, o.capacity);
  config.greedy.exchange_budget = o.budget.value_or(config.greedy.capacity + 1);
  config.noise.mode = ParseNoiseMode(o.noise_mode);
  if (config.noise.mode == NoiseMode::kFixed) config.noise.eps_fixed = o.eps;
  if (config.noise.mode == NoiseMode::kSeededUniform) config.noise.eps_max = o.eps;
  config.noise.seed = o.noise_seed;
  config.trace = o.trace;
  config.serial = o.serial;

  const RunReport report = SolveInstance(instance, config, o.exact);
  Emit(o.out, ReportToJson(report).dump(2) + "\n", out);
  return report.analysis.passed ? kExitOk : kExitAssertion;
}

int RunExact(const ExactOptions& o, std::ostream& out) {
  const Instance instance = LoadInstance(o.instance);
  const int capacity = ResolveCapacity(instance, o.capacity);
  const OraclePtr oracle = MakeExactOracle(instance);
  const ExactSolution brute = BruteForceOpt(*oracle, instance.ids(), capacity);
  const CandidateSetResult candidates = CandidateSetOpt(instance, capacity);

  const double scale = std::max(1.0, std::abs(brute.revenue));
  const bool agree =
      std::abs(brute.revenue - candidates.solution.revenue) <= 1e-9 * scale;
  const std::uint64_t collection_bound =
      static_cast<std::uint64_t>(instance.size()) * capacity + 1;
  json candidate_doc = ExactSolutionToJson(candidates.solution);
  candidate_doc["collection_size"] = candidates.candidates.size();
  json doc = {{"instance_digest", InstanceDigest(instance)},
              {"capacity", capacity},
              {"brute_force", ExactSolutionToJson(brute)},
              {"candidate_set", std::move(candidate_doc)},
              {"collection_bound", collection_bound},
              {"collection_within_bound",
               candidates.candidates.size() <= collection_bound},
              {"agree", agree}};
  Emit(o.out, doc.dump(2) + "\n", out);
  return agree ? kExitOk : kExitAssertion;
}

int RunBench(const BenchOptions& o, std::ostream& out) {
  std::vector<BenchCase> cases;
  if (o.suite == "exactness") {
    cases = ExactnessSuite();
  } else if (o.suite == "noise") {
    cases = NoiseSuite();
  } else if (o.suite == "grid") {
    cases = GridSuite(o.seeds, o.base_seed);
  } else {
    throw Error(ErrorCode::kUsage, "unknown suite '" + o.suite + "'");
  }
  const std::vector<CaseOutcome> outcomes = RunCases(cases);
  const std::vector<CellSummary> cells = Summarize(outcomes);

  int exact_cases = 0;
  int exact_pass = 0;
  int call_violations = 0;
  int gap_cases = 0;
  int gap_violations = 0;
  int vacuous = 0;
  std::size_t trace_violations = 0;
  for (const CaseOutcome& c : outcomes) {
    if (c.spec.eps_max == 0.0 && c.budget >= c.spec.capacity + 1) {
      ++exact_cases;
      exact_pass += c.optimal ? 1 : 0;
    }
    call_violations += c.oracle_calls > c.call_bound ? 1 : 0;
    trace_violations += c.trace_violations;
  }
  for (const CellSummary& cell : cells) {
    gap_cases += cell.gap_bound_cases;
    gap_violations += cell.gap_bound_violations;
    vacuous += cell.vacuous_cases;
  }

  out << "suite: " << o.suite << " (" << outcomes.size() << " runs)\n";
  out << FormatSummaryTable(cells);
  char line[160];
  if (exact_cases > 0) {
    std::snprintf(line, sizeof(line), "pass rate: %.2f%% (%d/%d)\n",
                  100.0 * exact_pass / exact_cases, exact_pass, exact_cases);
    out << line;
  }
  out << "call bound violations: " << call_violations << "\n";
  out << "gap bound violations: " << gap_violations << " (non-vacuous "
      << gap_cases << ", vacuous " << vacuous << ")\n";
  out << "trace violations: " << trace_violations << "\n";

  if (!o.out.empty()) {
    json rows = json::array();
    for (const CellSummary& c : cells) {
      rows.push_back({{"N", c.n},
                      {"C", c.capacity},
                      {"b", c.budget == kRobustBudget ? json("robust") : json(c.budget)},
                      {"eps", c.eps_max},
                      {"runs", c.runs},
                      {"optimal_runs", c.optimal_runs},
                      {"max_gap", c.max_gap},
                      {"max_calls", c.max_calls},
                      {"call_bound", c.call_bound},
                      {"call_bound_violations", c.call_bound_violations},
                      {"gap_bound_cases", c.gap_bound_cases},
                      {"gap_bound_violations", c.gap_bound_violations},
                      {"vacuous_cases", c.vacuous_cases},
                      {"trace_violations", c.trace_violations}});
    }
    json doc = {{"suite", o.suite},
                {"runs", outcomes.size()},
                {"cells", std::move(rows)},
                {"exactness_cases", exact_cases},
                {"exactness_passed", exact_pass},
                {"call_bound_violations", call_violations},
                {"gap_bound_violations", gap_violations},
                {"trace_violations", trace_violations}};
    WriteTextFile(o.out, doc.dump(2) + "\n");
  }
  const bool ok = exact_pass == exact_cases && call_violations == 0 &&
                  gap_violations == 0 && trace_violations == 0;
  return ok ? kExitOk : kExitAssertion;
}

int RunVerify(const VerifyOptions& o, std::ostream& out) {
  json doc;
  try {
    doc = json::parse(ReadTextFile(o.report));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchema, std::string("invalid report JSON: ") + e.what());
  }
  const RunReport report = ReportFromJson(doc);
  const bool digest_ok = InstanceDigest(report.instance) == report.instance_digest;
  const RunAnalysis analysis =
      AnalyzeRun(report.instance, report.config, report.result, report.exact);
  const bool true_revenue_ok =
      MnlRevenue(report.instance, report.result.best_assortment) ==
      report.best_true_revenue;
  const bool consistent = digest_ok && true_revenue_ok &&
                          analysis.passed == report.analysis.passed;
  json summary = {{"instance_digest_ok", digest_ok},
                  {"true_revenue_ok", true_revenue_ok},
                  {"recorded_passed", report.analysis.passed},
                  {"recomputed_passed", analysis.passed},
                  {"consistent", consistent},
                  {"analysis", AnalysisToJson(analysis)}};
  Emit(o.out, summary.dump(2) + "\n", out);
  return consistent && analysis.passed ? kExitOk : kExitAssertion;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Capacitated assortment optimization with greedy add/exchange",
               "assort"};
  app.require_subcommand(1);
  int threads = DefaultThreadCount();
  app.add_option("--threads", threads,
                 std::string("OpenMP threads (default: $") + kThreadsEnvVar +
                     " or all cores)")
      ->check(CLI::PositiveNumber);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random MNL instance");
  gen_cmd->add_option("--N", gen.spec.n, "Number of products")->required()
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen.spec.seed, "Generator seed");
  gen_cmd->add_option("--w-lo", gen.spec.weight_lo, "Smallest weight")->capture_default_str();
  gen_cmd->add_option("--w-hi", gen.spec.weight_hi, "Largest weight")->capture_default_str();
  gen_cmd->add_option("--p-lo", gen.spec.price_lo, "Smallest price")->capture_default_str();
  gen_cmd->add_option("--p-hi", gen.spec.price_hi, "Largest price")->capture_default_str();
  gen_cmd->add_option("--capacity", gen.capacity, "Capacity stored in the file");
  gen_cmd->add_option("-o,--out", gen.out, "Output path (default stdout)");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run the greedy optimizer");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--S", solve.seed_size, "Seed size")->capture_default_str();
  solve_cmd->add_option("--C", solve.capacity, "Capacity (default: from file)");
  solve_cmd->add_option("--b", solve.budget, "Exchange-out budget (default C+1)");
  solve_cmd->add_option("--noise-mode", solve.noise_mode, "none|fixed|seeded-uniform")
      ->check(CLI::IsMember({"none", "fixed", "seeded-uniform"}))
      ->capture_default_str();
  solve_cmd->add_option("--eps", solve.eps, "Noise rate in [0, 1)");
  solve_cmd->add_option("--seed", solve.noise_seed, "Noise seed");
  solve_cmd->add_flag("--trace", solve.trace, "Record iteration traces");
  solve_cmd->add_flag("--exact", solve.exact, "Also brute-force the optimum");
  solve_cmd->add_flag("--serial", solve.serial, "Use the single-threaded solver");
  solve_cmd->add_option("-o,--out", solve.out, "Report path (default stdout)");

  ExactOptions exact;
  auto* exact_cmd = app.add_subcommand(
      "exact", "Cross-check exhaustive search against the candidate-set solver");
  exact_cmd->add_option("instance", exact.instance, "Instance file")->required();
  exact_cmd->add_option("--C", exact.capacity, "Capacity (default: from file)");
  exact_cmd->add_option("-o,--out", exact.out, "Output path (default stdout)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a seeded experiment suite");
  bench_cmd->add_option("--suite", bench.suite, "grid|exactness|noise")
      ->check(CLI::IsMember({"grid", "exactness", "noise"}))
      ->capture_default_str();
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds per grid cell")
      ->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--base-seed", bench.base_seed, "Grid base seed")
      ->capture_default_str();
  bench_cmd->add_option("-o,--out", bench.out, "Also write a JSON summary here");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a run report");
  verify_cmd->add_option("report", verify.report, "Report file")->required();
  verify_cmd->add_option("-o,--out", verify.out, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    PrintError(err, ErrorCodeName(ErrorCode::kUsage), e.what(), kExitUsage);
    return kExitUsage;
  }

  try {
    SetThreadCount(threads);
    if (gen_cmd->parsed()) return RunGen(gen, out);
    if (solve_cmd->parsed()) return RunSolve(solve, out);
    if (exact_cmd->parsed()) return RunExact(exact, out);
    if (bench_cmd->parsed()) return RunBench(bench, out);
    if (verify_cmd->parsed()) return RunVerify(verify, out);
  } catch (const Error& e) {
    const int code = ExitCodeFor(e.code());
    PrintError(err, ErrorCodeName(e.code()), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    PrintError(err, "internal", e.what(), kExitAssertion);
    return kExitAssertion;
  }
  return kExitUsage;
}

}  // namespace assortment::cli
