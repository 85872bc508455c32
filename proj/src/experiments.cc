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

#include "assortment/experiments.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <tuple>

#include "assortment/hash.h"
#include "assortment/instance_io.h"
#include "assortment/parallel.h"
#include "assortment/report.h"

namespace assortment {

std::vector<BenchCase> ExactnessSuite(std::uint64_t base_seed) {
  constexpr int kNs[] = {6, 8, 10};
  constexpr int kCs[] = {2, 3, 4};
  std::vector<BenchCase> cases;
  for (int k = 0; k < 200; ++k) {
    BenchCase c;
    c.n = kNs[k % 3];
    c.capacity = kCs[(k / 3) % 3];
    c.budget = c.capacity + 1;
    c.instance_seed = DeriveSeed(base_seed, static_cast<std::uint64_t>(k));
    cases.push_back(c);
  }
  return cases;
}

std::vector<BenchCase> NoiseSuite(std::uint64_t base_seed) {
  std::vector<BenchCase> cases;
  for (double eps : {0.001, 0.01}) {
    for (int k = 0; k < 100; ++k) {
      BenchCase c;
      c.n = 8;
      c.capacity = 3;
      c.budget = kRobustBudget;
      c.eps_max = eps;
      c.instance_seed = DeriveSeed(base_seed, static_cast<std::uint64_t>(k));
      c.noise_seed = DeriveSeed(c.instance_seed, 0x6e6f697365ULL);
      cases.push_back(c);
    }
  }
  return cases;
}

std::vector<BenchCase> GridSuite(int seeds_per_cell, std::uint64_t base_seed,
                                 std::vector<int> ns,
                                 std::vector<int> capacities,
                                 std::vector<double> eps) {
  std::vector<BenchCase> cases;
  std::uint64_t cell = 0;
  for (int n : ns) {
    for (int c : capacities) {
      if (c > n) continue;
      for (int b : {c, c + 1, 2 * c}) {
        for (double e : eps) {
          const std::uint64_t cell_seed = DeriveSeed(base_seed, cell++);
          for (int s = 0; s < seeds_per_cell; ++s) {
            BenchCase bc;
            bc.n = n;
            bc.capacity = c;
            bc.budget = b;
            bc.eps_max = e;
            bc.instance_seed = DeriveSeed(cell_seed, static_cast<std::uint64_t>(s));
            bc.noise_seed = DeriveSeed(bc.instance_seed, 0x6e6f697365ULL);
            cases.push_back(bc);
          }
        }
      }
    }
  }
  return cases;
}

CaseOutcome RunCase(const BenchCase& spec) {
  GeneratorSpec gen;
  gen.n = spec.n;
  gen.capacity = spec.capacity;
  gen.seed = spec.instance_seed;
  const Instance instance = GenerateInstance(gen);

  CaseOutcome out;
  out.spec = spec;
  out.robust_budget = RobustExchangeBudget(instance, spec.capacity, spec.eps_max);
  out.budget = spec.budget == kRobustBudget ? out.robust_budget : spec.budget;

  NoiseSpec noise;
  if (spec.eps_max > 0.0) {
    noise.mode = NoiseMode::kSeededUniform;
    noise.eps_max = spec.eps_max;
    noise.seed = spec.noise_seed;
  }
  const OraclePtr exact = MakeExactOracle(instance);
  const auto counting = MakeCountingOracle(MakeNoisyOracle(exact, noise));
  const GreedyConfig config{0, spec.capacity, out.budget};
  const std::vector<ProductId> universe = instance.ids();

  const SolveReport solved = GreedyOptSerial(config, universe, *counting, true);
  const ExactSolution optimum = BruteForceOptSerial(*exact, universe, spec.capacity);

  out.greedy_assortment = solved.best_assortment;
  out.greedy_true_revenue = MnlRevenue(instance, solved.best_assortment);
  out.optimum = optimum.assortment;
  out.optimum_revenue = optimum.revenue;
  out.gap = optimum.revenue == 0.0
      ? 0.0
      : (optimum.revenue - out.greedy_true_revenue) / optimum.revenue;
  out.optimal = out.gap <= kOptimalityTolerance;
  out.oracle_calls = counting->stats().call_count;
  out.call_bound = GreedyOptCallBound(config, instance.size());
  out.max_loop_iterations = solved.max_loop_iterations;
  out.bound = ComputeBounds(instance, spec.capacity, spec.eps_max, optimum);
  const double delta_c = spec.eps_max > 0.0 ? out.bound.delta_bound : 0.0;
  for (const SeedTrace& t : *solved.traces) {
    out.trace_steps += t.steps.size();
    out.trace_violations += CheckTraceInvariants(instance, t.steps, delta_c).size();
  }
  return out;
}

std::vector<CaseOutcome> RunCases(std::span<const BenchCase> cases) {
  std::vector<CaseOutcome> outcomes(cases.size());
  LoopErrors errors;
  const auto count = static_cast<std::int64_t>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      outcomes[static_cast<std::size_t>(k)] = RunCase(cases[static_cast<std::size_t>(k)]);
    } catch (...) {
      errors.Capture(static_cast<std::size_t>(k));
    }
  }
  errors.RethrowIfAny();
  return outcomes;
}

std::vector<CellSummary> Summarize(std::span<const CaseOutcome> outcomes) {
  std::vector<CellSummary> cells;
  std::map<std::tuple<int, int, int, double>, std::size_t> index;
  for (const CaseOutcome& o : outcomes) {
    const auto key = std::make_tuple(o.spec.n, o.spec.capacity, o.spec.budget,
                                     o.spec.eps_max);
    auto [it, inserted] = index.emplace(key, cells.size());
    if (inserted) {
      CellSummary cell;
      cell.n = o.spec.n;
      cell.capacity = o.spec.capacity;
      cell.budget = o.spec.budget;
      cell.eps_max = o.spec.eps_max;
      cells.push_back(cell);
    }
    CellSummary& cell = cells[it->second];
    ++cell.runs;
    cell.optimal_runs += o.optimal ? 1 : 0;
    cell.max_gap = std::max(cell.max_gap, o.gap);
    cell.max_calls = std::max(cell.max_calls, o.oracle_calls);
    cell.call_bound = std::max(cell.call_bound, o.call_bound);
    cell.call_bound_violations += o.oracle_calls > o.call_bound ? 1 : 0;
    if (o.spec.eps_max > 0.0) {
      if (o.bound.vacuous()) {
        ++cell.vacuous_cases;
      } else {
        ++cell.gap_bound_cases;
        // The guarantee needs the robust budget; smaller budgets are only
        // measured.
        if (o.budget >= o.robust_budget && o.gap > o.bound.f_value) {
          ++cell.gap_bound_violations;
        }
      }
    }
    cell.trace_violations += o.trace_violations;
  }
  return cells;
}

std::string FormatSummaryTable(std::span<const CellSummary> cells) {
  std::string table;
  char line[256];
  std::snprintf(line, sizeof(line),
                "%4s %3s %6s %7s %5s %9s %11s %10s %12s %9s %9s %8s\n", "N",
                "C", "b", "eps", "runs", "optimal", "max_gap", "max_calls",
                "call_bound", "gap_viol", "vacuous", "trace_v");
  table += line;
  for (const CellSummary& c : cells) {
    const std::string budget =
        c.budget == kRobustBudget ? "robust" : std::to_string(c.budget);
    std::snprintf(line, sizeof(line),
                  "%4d %3d %6s %7.4g %5d %4d/%-4d %11.3e %10llu %12llu %9d %9d "
                  "%8zu\n",
                  c.n, c.capacity, budget.c_str(), c.eps_max, c.runs,
                  c.optimal_runs, c.runs, c.max_gap,
                  static_cast<unsigned long long>(c.max_calls),
                  static_cast<unsigned long long>(c.call_bound),
                  c.gap_bound_violations, c.vacuous_cases, c.trace_violations);
    table += line;
  }
  return table;
}

}  // namespace assortment
