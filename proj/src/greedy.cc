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

#include "assortment/greedy.h"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "assortment/combinatorics.h"
#include "assortment/parallel.h"

namespace assortment {
namespace {

constexpr double kNoCandidate = -std::numeric_limits<double>::infinity();

std::vector<ProductId> SortedUnique(std::span<const ProductId> ids) {
  std::vector<ProductId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// Keeps the better of two per-seed results: higher revenue, then the
// lexicographically smaller assortment.
bool Better(double revenue, const Assortment& m, double best_revenue,
            const Assortment& best) {
  if (revenue != best_revenue) return revenue > best_revenue;
  return m < best;
}

struct SeedOutcome {
  Assortment assortment;
  double revenue = 0.0;
  std::uint64_t calls = 0;
  int max_loop_iterations = 0;
  SeedTrace trace;
};

SeedOutcome RunSeed(const GreedyConfig& config, const Assortment& seed,
                    std::span<const ProductId> universe,
                    const RevenueOracle& oracle, bool trace) {
  SeedOutcome out;
  out.assortment = seed;
  out.trace.seed = seed;
  const int rounds = config.capacity - config.seed_size;
  if (rounds == 0) {
    out.revenue = oracle.evaluate(seed);
    out.calls = 1;
    return out;
  }
  for (int round = 0; round < rounds; ++round) {
    AddExchangeResult step = AddExchange(out.assortment, universe,
                                         config.exchange_budget, oracle, trace,
                                         round);
    out.assortment = std::move(step.assortment);
    out.revenue = step.revenue;
    out.calls += step.oracle_calls;
    out.max_loop_iterations =
        std::max(out.max_loop_iterations, step.loop_iterations);
    if (trace) {
      out.trace.steps.insert(out.trace.steps.end(),
                             std::make_move_iterator(step.trace.begin()),
                             std::make_move_iterator(step.trace.end()));
    }
  }
  return out;
}

SolveReport Merge(std::vector<SeedOutcome>& outcomes, bool trace) {
  SolveReport report;
  report.seeds_explored = outcomes.size();
  bool have_best = false;
  for (SeedOutcome& o : outcomes) {
    report.oracle_calls += o.calls;
    report.max_loop_iterations =
        std::max(report.max_loop_iterations, o.max_loop_iterations);
    if (!have_best || Better(o.revenue, o.assortment,
                             report.best_oracle_revenue,
                             report.best_assortment)) {
      report.best_assortment = o.assortment;
      report.best_oracle_revenue = o.revenue;
      have_best = true;
    }
  }
  if (trace) {
    report.traces.emplace();
    report.traces->reserve(outcomes.size());
    for (SeedOutcome& o : outcomes) report.traces->push_back(std::move(o.trace));
  }
  return report;
}

}  // namespace

void GreedyConfig::Validate(int universe_size) const {
  if (seed_size < 0 || seed_size > capacity || capacity > universe_size) {
    throw Error(ErrorCode::kInvalidConfig,
                "need 0 <= S <= C <= N; got S=" + std::to_string(seed_size) +
                    " C=" + std::to_string(capacity) +
                    " N=" + std::to_string(universe_size));
  }
  if (exchange_budget < 1) {
    throw Error(ErrorCode::kInvalidConfig, "exchange budget b must be >= 1");
  }
}

std::string_view StepActionName(StepAction action) {
  switch (action) {
    case StepAction::kAdd: return "add";
    case StepAction::kExchange: return "exchange";
    case StepAction::kTerminate: return "terminate";
  }
  return "terminate";
}

StepAction ParseStepAction(std::string_view name) {
  if (name == "add") return StepAction::kAdd;
  if (name == "exchange") return StepAction::kExchange;
  if (name == "terminate") return StepAction::kTerminate;
  throw Error(ErrorCode::kMalformedTrace,
              "unknown step action '" + std::string(name) + "'");
}

std::uint64_t AddExchangeCallBound(int universe_size, int capacity,
                                   int budget) {
  const auto n = static_cast<std::uint64_t>(universe_size);
  const auto iterations = SaturatingMul(n, static_cast<std::uint64_t>(budget)) + 1;
  const auto per_iteration =
      SaturatingMul(static_cast<std::uint64_t>(capacity), n) + n;
  return SaturatingMul(iterations, per_iteration);
}

std::uint64_t GreedyOptCallBound(const GreedyConfig& config,
                                 int universe_size) {
  const auto rounds =
      static_cast<std::uint64_t>(config.capacity - config.seed_size);
  return SaturatingMul(
      SaturatingMul(rounds, Binomial(universe_size, config.seed_size)),
      AddExchangeCallBound(universe_size, config.capacity,
                           config.exchange_budget));
}

AddExchangeResult AddExchange(const Assortment& start,
                              std::span<const ProductId> universe, int budget,
                              const RevenueOracle& oracle, bool trace,
                              int invocation) {
  if (budget < 1) {
    throw Error(ErrorCode::kInvalidConfig, "exchange budget b must be >= 1");
  }
  AddExchangeResult result;
  result.assortment = start;
  result.revenue = oracle.evaluate(start);
  result.oracle_calls = 1;

  std::set<ProductId> pool;
  for (ProductId id : SortedUnique(universe)) {
    if (!start.contains(id)) pool.insert(id);
  }
  std::map<ProductId, int> exchange_outs;
  const int max_size = start.size() + 1;

  Assortment& current = result.assortment;
  while (!pool.empty()) {
    ++result.loop_iterations;

    // Best exchange: smallest entering id, then smallest leaving id, on ties.
    double exchange_revenue = kNoCandidate;
    ProductId exchange_in = 0;
    ProductId exchange_out = 0;
    for (ProductId j : pool) {
      for (ProductId i : current) {
        const double r = oracle.evaluate(current.exchanged(i, j));
        ++result.oracle_calls;
        if (r > exchange_revenue) {
          exchange_revenue = r;
          exchange_in = j;
          exchange_out = i;
        }
      }
    }

    double add_revenue = kNoCandidate;
    ProductId add_id = 0;
    const bool can_add = current.size() < max_size;
    if (can_add) {
      for (ProductId k : pool) {
        const double r = oracle.evaluate(current.with(k));
        ++result.oracle_calls;
        if (r > add_revenue) {
          add_revenue = r;
          add_id = k;
        }
      }
    }

    IterationRecord record;
    if (trace) {
      record.invocation = invocation;
      record.step_index = result.loop_iterations - 1;
      record.assortment_before = current;
      record.pool_before.assign(pool.begin(), pool.end());
    }

    if (can_add && add_revenue > result.revenue &&
        add_revenue > exchange_revenue) {
      current = current.with(add_id);
      result.revenue = add_revenue;
      pool.erase(add_id);
      record.action = StepAction::kAdd;
      record.added = add_id;
    } else if (exchange_revenue > result.revenue) {
      current = current.exchanged(exchange_out, exchange_in);
      result.revenue = exchange_revenue;
      pool.erase(exchange_in);
      if (++exchange_outs[exchange_out] < budget) pool.insert(exchange_out);
      record.action = StepAction::kExchange;
      record.added = exchange_in;
      record.removed = exchange_out;
    } else {
      record.action = StepAction::kTerminate;
    }

    const bool stop = record.action == StepAction::kTerminate;
    if (trace) {
      record.revenue_after = result.revenue;
      record.assortment_after = current;
      record.universe_size_after = static_cast<int>(pool.size());
      record.exchange_out_counts = exchange_outs;
      result.trace.push_back(std::move(record));
    }
    if (stop) break;
  }

  if (trace && (result.trace.empty() ||
                result.trace.back().action != StepAction::kTerminate)) {
    // Pool exhausted: close the round with an explicit terminate record.
    IterationRecord record;
    record.invocation = invocation;
    record.step_index = result.loop_iterations;
    record.action = StepAction::kTerminate;
    record.revenue_after = result.revenue;
    record.assortment_before = current;
    record.assortment_after = current;
    record.universe_size_after = 0;
    record.exchange_out_counts = exchange_outs;
    result.trace.push_back(std::move(record));
  }
  return result;
}

SolveReport GreedyOptSerial(const GreedyConfig& config,
                            std::span<const ProductId> universe,
                            const RevenueOracle& oracle, bool trace) {
  const std::vector<ProductId> items = SortedUnique(universe);
  config.Validate(static_cast<int>(items.size()));
  const std::vector<Assortment> seeds = Combinations(items, config.seed_size);
  std::vector<SeedOutcome> outcomes;
  outcomes.reserve(seeds.size());
  for (const Assortment& seed : seeds) {
    outcomes.push_back(RunSeed(config, seed, items, oracle, trace));
  }
  return Merge(outcomes, trace);
}

SolveReport GreedyOpt(const GreedyConfig& config,
                      std::span<const ProductId> universe,
                      const RevenueOracle& oracle, bool trace) {
  const std::vector<ProductId> items = SortedUnique(universe);
  config.Validate(static_cast<int>(items.size()));
  const std::vector<Assortment> seeds = Combinations(items, config.seed_size);
  std::vector<SeedOutcome> outcomes(seeds.size());
  LoopErrors errors;
  const auto count = static_cast<std::int64_t>(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < count; ++s) {
    try {
      const auto k = static_cast<std::size_t>(s);
      outcomes[k] = RunSeed(config, seeds[k], items, oracle, trace);
    } catch (...) {
      errors.Capture(static_cast<std::size_t>(s));
    }
  }
  errors.RethrowIfAny();
  return Merge(outcomes, trace);
}

Assortment NaiveGreedy(int capacity, std::span<const ProductId> universe,
                       const RevenueOracle& oracle) {
  const std::vector<ProductId> items = SortedUnique(universe);
  if (capacity < 0 || capacity > static_cast<int>(items.size())) {
    throw Error(ErrorCode::kInvalidConfig, "need 0 <= C <= N");
  }
  Assortment current;
  if (capacity == 0) return current;
  double revenue = oracle.evaluate(current);
  while (current.size() < capacity) {
    double best = kNoCandidate;
    ProductId best_id = 0;
    for (ProductId k : items) {
      if (current.contains(k)) continue;
      const double r = oracle.evaluate(current.with(k));
      if (r > best) {
        best = r;
        best_id = k;
      }
    }
    if (!(best > revenue)) break;
    current = current.with(best_id);
    revenue = best;
  }
  return current;
}

}  // namespace assortment
