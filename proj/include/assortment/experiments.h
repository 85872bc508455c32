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

// Seeded experiment suites: each case is a generated instance solved with the
// greedy optimizer and checked against brute force. Cases run concurrently;
// each case derives its seeds from its position, so outcomes do not depend on
// the thread count.

#ifndef ASSORTMENT_EXPERIMENTS_H_
#define ASSORTMENT_EXPERIMENTS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "assortment/analysis.h"

namespace assortment {

// Budget marker: use RobustExchangeBudget for the case's instance and eps.
inline constexpr int kRobustBudget = -1;

struct BenchCase {
  int n = 0;
  int capacity = 0;
  int budget = 0;  // or kRobustBudget
  double eps_max = 0.0;  // seeded-uniform noise when > 0
  std::uint64_t instance_seed = 0;
  std::uint64_t noise_seed = 0;
};

struct CaseOutcome {
  BenchCase spec;
  int budget = 0;         // resolved exchange budget
  int robust_budget = 0;  // RobustExchangeBudget for this instance and eps
  Assortment greedy_assortment;
  double greedy_true_revenue = 0.0;
  Assortment optimum;
  double optimum_revenue = 0.0;
  double gap = 0.0;
  bool optimal = false;
  std::uint64_t oracle_calls = 0;
  std::uint64_t call_bound = 0;
  int max_loop_iterations = 0;
  GapBound bound;
  std::size_t trace_violations = 0;
  std::size_t trace_steps = 0;
};

// 200 cases, N cycling over {6, 8, 10} and C over {2, 3, 4}, b = C + 1, exact
// oracle.
std::vector<BenchCase> ExactnessSuite(std::uint64_t base_seed = 1);

// 100 instances with N = 8, C = 3, each at eps_max 0.001 and 0.01, budget
// kRobustBudget.
std::vector<BenchCase> NoiseSuite(std::uint64_t base_seed = 2);

// N x C x b x eps grid; b in {C, C + 1, 2C}.
std::vector<BenchCase> GridSuite(int seeds_per_cell, std::uint64_t base_seed = 3,
                                 std::vector<int> ns = {6, 8, 10},
                                 std::vector<int> capacities = {2, 3, 4},
                                 std::vector<double> eps = {0.0, 0.001, 0.01});

// Solves one case (S = 0) with traces on and checks the traces with the
// bound-derived delta_C.
CaseOutcome RunCase(const BenchCase& spec);

std::vector<CaseOutcome> RunCases(std::span<const BenchCase> cases);

struct CellSummary {
  int n = 0;
  int capacity = 0;
  int budget = 0;  // kRobustBudget for noise-suite cells
  double eps_max = 0.0;
  int runs = 0;
  int optimal_runs = 0;
  double max_gap = 0.0;
  std::uint64_t max_calls = 0;
  std::uint64_t call_bound = 0;  // max bound over the cell
  int call_bound_violations = 0;
  int gap_bound_cases = 0;   // non-vacuous bound
  int gap_bound_violations = 0;
  int vacuous_cases = 0;
  std::size_t trace_violations = 0;
};

std::vector<CellSummary> Summarize(std::span<const CaseOutcome> outcomes);

// Fixed-width table, one row per cell.
std::string FormatSummaryTable(std::span<const CellSummary> cells);

}  // namespace assortment

#endif  // ASSORTMENT_EXPERIMENTS_H_
