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

// Run reports: one solve, its configuration, optional exact optimum, bounds
// and invariant checks, serialized as a single self-contained JSON document.
// The instance is embedded so `verify` needs nothing but the report.

#ifndef ASSORTMENT_REPORT_H_
#define ASSORTMENT_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "assortment/analysis.h"
#include "assortment/choice_model.h"
#include "assortment/greedy.h"
#include "assortment/reference.h"

namespace assortment {

inline constexpr std::string_view kReportSchemaVersion = "1";

// Relative tolerance for "greedy revenue equals the exact optimum".
inline constexpr double kOptimalityTolerance = 1e-9;

struct RunConfig {
  GreedyConfig greedy;
  NoiseSpec noise;
  bool trace = false;
  bool serial = false;  // use the single-threaded reference solver
};

struct RunAnalysis {
  double delta_c = 0.0;  // slack used for the trace checks
  std::uint64_t call_bound = 0;
  bool call_bound_applicable = false;  // C > S
  bool call_bound_ok = true;
  int loop_iteration_bound = 0;  // N b + 1
  bool loop_bound_ok = true;
  std::vector<TraceViolation> trace_violations;
  int comparison_checks = 0;
  int comparison_failures = 0;
  // Set only when the exact optimum is known.
  std::optional<bool> optimal;
  bool exactness_applicable = false;    // no noise and b >= C + 1
  bool gap_bound_applicable = false;    // noisy, bound < 1, b large enough
  std::optional<bool> gap_within_bound;
  bool passed = true;
};

struct RunReport {
  Instance instance;
  std::string instance_digest;
  RunConfig config;
  SolveReport result;
  double best_true_revenue = 0.0;  // exact MNL revenue of the result
  std::optional<ExactSolution> exact;
  std::optional<double> gap;  // (exact - true) / exact
  std::optional<GapBound> bounds;
  RunAnalysis analysis;
  double wall_ms = 0.0;
};

// Runs the greedy solver on exact -> noisy -> counting oracles. With
// `with_exact`, also brute-forces the optimum and fills gap and bounds.
RunReport SolveInstance(const Instance& instance, const RunConfig& config,
                        bool with_exact);

// Recomputes every check from the report's recorded contents.
RunAnalysis AnalyzeRun(const Instance& instance, const RunConfig& config,
                       const SolveReport& result,
                       const std::optional<ExactSolution>& exact);

nlohmann::json ReportToJson(const RunReport& report);
RunReport ReportFromJson(const nlohmann::json& doc);

nlohmann::json ExactSolutionToJson(const ExactSolution& solution);
ExactSolution ExactSolutionFromJson(const nlohmann::json& doc);
nlohmann::json AssortmentToJson(const Assortment& m);
Assortment AssortmentFromJson(const nlohmann::json& doc);
nlohmann::json AnalysisToJson(const RunAnalysis& analysis);
nlohmann::json GapBoundToJson(const GapBound& bound);

}  // namespace assortment

#endif  // ASSORTMENT_REPORT_H_
