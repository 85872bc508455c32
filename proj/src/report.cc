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

#include "assortment/report.h"

#include <chrono>
#include <cmath>

#include "assortment/instance_io.h"

namespace assortment {

using nlohmann::json;

namespace {

double RelativeGap(double optimum, double achieved) {
  if (optimum == 0.0) return achieved == 0.0 ? 0.0 : -achieved;
  return (optimum - achieved) / optimum;
}

template <typename T>
T Field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw Error(ErrorCode::kSchema, std::string("report is missing '") + key + "'");
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kSchema, std::string("report field '") + key +
                                        "' has the wrong type");
  }
}

json OptionalId(const std::optional<ProductId>& id) {
  return id ? json(*id) : json(nullptr);
}

std::optional<ProductId> OptionalIdFrom(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  return it->get<ProductId>();
}

json RecordToJson(const IterationRecord& r) {
  json outs = json::object();
  for (const auto& [id, count] : r.exchange_out_counts) {
    outs[std::to_string(id)] = count;
  }
  return {{"invocation", r.invocation},
          {"step", r.step_index},
          {"action", StepActionName(r.action)},
          {"added", OptionalId(r.added)},
          {"removed", OptionalId(r.removed)},
          {"revenue_after", r.revenue_after},
          {"before", AssortmentToJson(r.assortment_before)},
          {"after", AssortmentToJson(r.assortment_after)},
          {"pool_before", r.pool_before},
          {"pool_size_after", r.universe_size_after},
          {"exchange_outs", std::move(outs)}};
}

IterationRecord RecordFromJson(const json& doc) {
  IterationRecord r;
  r.invocation = Field<int>(doc, "invocation");
  r.step_index = Field<int>(doc, "step");
  r.action = ParseStepAction(Field<std::string>(doc, "action"));
  r.added = OptionalIdFrom(doc, "added");
  r.removed = OptionalIdFrom(doc, "removed");
  r.revenue_after = Field<double>(doc, "revenue_after");
  r.assortment_before = AssortmentFromJson(doc.at("before"));
  r.assortment_after = AssortmentFromJson(doc.at("after"));
  r.pool_before = Field<std::vector<ProductId>>(doc, "pool_before");
  r.universe_size_after = Field<int>(doc, "pool_size_after");
  for (const auto& [key, value] : doc.at("exchange_outs").items()) {
    r.exchange_out_counts[std::stoi(key)] = value.get<int>();
  }
  return r;
}

json ViolationToJson(const TraceViolation& v) {
  return {{"invocation", v.invocation}, {"step", v.step_index},
          {"kind", v.kind},             {"chosen", v.chosen},
          {"rival", v.rival},           {"chosen_value", v.chosen_value},
          {"rival_value", v.rival_value}, {"slack", v.slack}};
}

}  // namespace

json AssortmentToJson(const Assortment& m) {
  return json(std::vector<ProductId>(m.begin(), m.end()));
}

Assortment AssortmentFromJson(const json& doc) {
  if (!doc.is_array()) throw Error(ErrorCode::kSchema, "assortment must be an array");
  return Assortment(doc.get<std::vector<ProductId>>());
}

json ExactSolutionToJson(const ExactSolution& solution) {
  json per_size = json::array();
  for (const SizeOptimum& s : solution.per_size_optima) {
    per_size.push_back({{"assortment", AssortmentToJson(s.assortment)},
                        {"revenue", s.revenue}});
  }
  return {{"assortment", AssortmentToJson(solution.assortment)},
          {"revenue", solution.revenue},
          {"per_size_optima", std::move(per_size)},
          {"assortments_evaluated", solution.assortments_evaluated}};
}

ExactSolution ExactSolutionFromJson(const json& doc) {
  ExactSolution s;
  s.assortment = AssortmentFromJson(doc.at("assortment"));
  s.revenue = Field<double>(doc, "revenue");
  for (const json& item : doc.at("per_size_optima")) {
    s.per_size_optima.push_back(
        {AssortmentFromJson(item.at("assortment")), Field<double>(item, "revenue")});
  }
  s.assortments_evaluated = Field<std::uint64_t>(doc, "assortments_evaluated");
  return s;
}

json GapBoundToJson(const GapBound& b) {
  return {{"capacity", b.capacity},
          {"eps_max", b.eps_max},
          {"max_total_weight", b.max_total_weight},
          {"optimum_weight", b.optimum_weight},
          {"delta_bound", b.delta_bound},
          {"eta", b.eta},
          {"f_value", b.f_value},
          {"vacuous", b.vacuous()}};
}

json AnalysisToJson(const RunAnalysis& a) {
  json violations = json::array();
  for (const TraceViolation& v : a.trace_violations) {
    violations.push_back(ViolationToJson(v));
  }
  json doc = {{"delta_c", a.delta_c},
              {"call_bound", a.call_bound},
              {"call_bound_applicable", a.call_bound_applicable},
              {"call_bound_ok", a.call_bound_ok},
              {"loop_iteration_bound", a.loop_iteration_bound},
              {"loop_bound_ok", a.loop_bound_ok},
              {"trace_violations", std::move(violations)},
              {"comparison_checks", a.comparison_checks},
              {"comparison_failures", a.comparison_failures},
              {"exactness_applicable", a.exactness_applicable},
              {"gap_bound_applicable", a.gap_bound_applicable},
              {"passed", a.passed}};
  doc["optimal"] = a.optimal ? json(*a.optimal) : json(nullptr);
  doc["gap_within_bound"] =
      a.gap_within_bound ? json(*a.gap_within_bound) : json(nullptr);
  return doc;
}

RunAnalysis AnalyzeRun(const Instance& instance, const RunConfig& config,
                       const SolveReport& result,
                       const std::optional<ExactSolution>& exact) {
  RunAnalysis a;
  const GreedyConfig& g = config.greedy;
  const int n = instance.size();
  const double eps = config.noise.MaxEpsilon();
  a.delta_c = eps == 0.0 ? 0.0
                         : MaxTotalWeight(instance, g.capacity) * eps / (1.0 - eps);

  a.call_bound = GreedyOptCallBound(g, n);
  a.call_bound_applicable = g.capacity > g.seed_size;
  a.call_bound_ok = !a.call_bound_applicable || result.oracle_calls <= a.call_bound;
  a.loop_iteration_bound = n * g.exchange_budget + 1;
  a.loop_bound_ok = result.max_loop_iterations <= a.loop_iteration_bound;

  if (result.traces) {
    for (const SeedTrace& seed : *result.traces) {
      auto found = CheckTraceInvariants(instance, seed.steps, a.delta_c);
      a.trace_violations.insert(a.trace_violations.end(), found.begin(), found.end());
      for (const IterationRecord& r : seed.steps) {
        if (r.action == StepAction::kTerminate) continue;
        ++a.comparison_checks;
        if (!CheckTransformComparison(instance, r.assortment_after,
                                      r.assortment_before).holds()) {
          ++a.comparison_failures;
        }
      }
    }
  }

  const double true_revenue = MnlRevenue(instance, result.best_assortment);
  if (exact) {
    ++a.comparison_checks;
    if (!CheckTransformComparison(instance, exact->assortment,
                                  result.best_assortment).holds()) {
      ++a.comparison_failures;
    }
    const double gap = RelativeGap(exact->revenue, true_revenue);
    a.optimal = gap <= kOptimalityTolerance;
    a.exactness_applicable = eps == 0.0 && g.exchange_budget >= g.capacity + 1;
    if (eps > 0.0) {
      const GapBound bound = ComputeBounds(instance, g.capacity, eps, *exact);
      a.gap_bound_applicable =
          !bound.vacuous() &&
          g.exchange_budget >= RobustExchangeBudget(instance, g.capacity, eps);
      if (a.gap_bound_applicable) a.gap_within_bound = gap <= bound.f_value;
    }
  }

  a.passed = a.call_bound_ok && a.loop_bound_ok && a.trace_violations.empty() &&
             a.comparison_failures == 0 &&
             (!a.exactness_applicable || a.optimal.value_or(false)) &&
             (!a.gap_bound_applicable || a.gap_within_bound.value_or(false));
  return a;
}

RunReport SolveInstance(const Instance& instance, const RunConfig& config,
                        bool with_exact) {
  const auto start = std::chrono::steady_clock::now();
  config.greedy.Validate(instance.size());
  config.noise.Validate();

  const OraclePtr exact_oracle = MakeExactOracle(instance);
  const OraclePtr noisy = MakeNoisyOracle(exact_oracle, config.noise);
  const auto counting = MakeCountingOracle(noisy);

  RunReport report;
  report.instance = instance;
  report.instance_digest = InstanceDigest(instance);
  report.config = config;
  const std::vector<ProductId> universe = instance.ids();
  report.result = config.serial
      ? GreedyOptSerial(config.greedy, universe, *counting, config.trace)
      : GreedyOpt(config.greedy, universe, *counting, config.trace);
  if (counting->stats().call_count != report.result.oracle_calls) {
    throw Error(ErrorCode::kAssertion,
                "solver call accounting disagrees with the counting oracle");
  }
  report.best_true_revenue = MnlRevenue(instance, report.result.best_assortment);

  if (with_exact) {
    report.exact = BruteForceOpt(*exact_oracle, universe, config.greedy.capacity);
    report.gap = RelativeGap(report.exact->revenue, report.best_true_revenue);
    report.bounds = ComputeBounds(instance, config.greedy.capacity,
                                  config.noise.MaxEpsilon(), *report.exact);
  }
  report.analysis = AnalyzeRun(instance, config, report.result, report.exact);
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

json ReportToJson(const RunReport& report) {
  const RunConfig& c = report.config;
  json result = {
      {"best_assortment", AssortmentToJson(report.result.best_assortment)},
      {"best_oracle_revenue", report.result.best_oracle_revenue},
      {"best_true_revenue", report.best_true_revenue},
      {"oracle_calls", report.result.oracle_calls},
      {"seeds_explored", report.result.seeds_explored},
      {"max_loop_iterations", report.result.max_loop_iterations}};
  if (report.result.traces) {
    json traces = json::array();
    for (const SeedTrace& t : *report.result.traces) {
      json steps = json::array();
      for (const IterationRecord& r : t.steps) steps.push_back(RecordToJson(r));
      traces.push_back({{"seed", AssortmentToJson(t.seed)}, {"steps", std::move(steps)}});
    }
    result["traces"] = std::move(traces);
  }

  json doc = {
      {"schema_version", kReportSchemaVersion},
      {"instance_digest", report.instance_digest},
      {"instance", InstanceToJson(report.instance)},
      {"config",
       {{"S", c.greedy.seed_size},
        {"C", c.greedy.capacity},
        {"b", c.greedy.exchange_budget},
        {"trace", c.trace},
        {"serial", c.serial},
        {"noise",
         {{"mode", NoiseModeName(c.noise.mode)},
          {"eps_fixed", c.noise.eps_fixed},
          {"eps_max", c.noise.eps_max},
          {"seed", c.noise.seed}}}}},
      {"result", std::move(result)},
      {"analysis", AnalysisToJson(report.analysis)},
      {"timing", {{"wall_ms", report.wall_ms}}}};
  if (report.exact) doc["exact"] = ExactSolutionToJson(*report.exact);
  if (report.gap) doc["gap"] = *report.gap;
  if (report.bounds) doc["bounds"] = GapBoundToJson(*report.bounds);
  return doc;
}

RunReport ReportFromJson(const json& doc) {
  if (!doc.is_object() ||
      Field<std::string>(doc, "schema_version") != kReportSchemaVersion) {
    throw Error(ErrorCode::kSchema, "unsupported report schema_version");
  }
  RunReport report;
  report.instance = InstanceFromJson(doc.at("instance"));
  report.instance_digest = Field<std::string>(doc, "instance_digest");

  const json& config = doc.at("config");
  report.config.greedy.seed_size = Field<int>(config, "S");
  report.config.greedy.capacity = Field<int>(config, "C");
  report.config.greedy.exchange_budget = Field<int>(config, "b");
  report.config.trace = Field<bool>(config, "trace");
  report.config.serial = Field<bool>(config, "serial");
  const json& noise = config.at("noise");
  report.config.noise.mode = ParseNoiseMode(Field<std::string>(noise, "mode"));
  report.config.noise.eps_fixed = Field<double>(noise, "eps_fixed");
  report.config.noise.eps_max = Field<double>(noise, "eps_max");
  report.config.noise.seed = Field<std::uint64_t>(noise, "seed");

  const json& result = doc.at("result");
  report.result.best_assortment = AssortmentFromJson(result.at("best_assortment"));
  report.result.best_oracle_revenue = Field<double>(result, "best_oracle_revenue");
  report.best_true_revenue = Field<double>(result, "best_true_revenue");
  report.result.oracle_calls = Field<std::uint64_t>(result, "oracle_calls");
  report.result.seeds_explored = Field<std::uint64_t>(result, "seeds_explored");
  report.result.max_loop_iterations = Field<int>(result, "max_loop_iterations");
  if (auto traces = result.find("traces"); traces != result.end()) {
    report.result.traces.emplace();
    for (const json& t : *traces) {
      SeedTrace seed;
      seed.seed = AssortmentFromJson(t.at("seed"));
      for (const json& step : t.at("steps")) seed.steps.push_back(RecordFromJson(step));
      report.result.traces->push_back(std::move(seed));
    }
  }
  if (auto exact = doc.find("exact"); exact != doc.end()) {
    report.exact = ExactSolutionFromJson(*exact);
  }
  if (auto gap = doc.find("gap"); gap != doc.end()) report.gap = gap->get<double>();
  if (report.exact) {
    report.bounds = ComputeBounds(report.instance, report.config.greedy.capacity,
                                  report.config.noise.MaxEpsilon(), *report.exact);
  }
  report.analysis.passed = Field<bool>(doc.at("analysis"), "passed");
  report.wall_ms = Field<double>(doc.at("timing"), "wall_ms");
  return report;
}

}  // namespace assortment
