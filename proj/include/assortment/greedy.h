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

// Greedy add/exchange local search for capacitated assortment optimization.
//
// AddExchange grows an assortment by at most one product, interleaving greedy
// exchanges (swap one member for one candidate) with a single greedy addition.
// Each product may be exchanged out at most `b` times before it is retired
// from the candidate pool. GreedyOpt runs C - S rounds of AddExchange from
// every size-S seed and keeps the best result.
//
// With the exact MNL revenue, S = 0 and b >= C + 1 the result is optimal.

#ifndef ASSORTMENT_GREEDY_H_
#define ASSORTMENT_GREEDY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "assortment/assortment.h"
#include "assortment/choice_model.h"

namespace assortment {

struct GreedyConfig {
  int seed_size = 0;        // S
  int capacity = 1;         // C
  int exchange_budget = 2;  // b

  // Throws kInvalidConfig unless 0 <= S <= C <= universe_size and b >= 1.
  void Validate(int universe_size) const;
};

enum class StepAction { kAdd, kExchange, kTerminate };

std::string_view StepActionName(StepAction action);
StepAction ParseStepAction(std::string_view name);

// One pass of the AddExchange loop. `assortment_before` and `pool_before`
// capture the state the step's argmax ranged over.
struct IterationRecord {
  int invocation = 0;  // which of the C - S AddExchange rounds
  int step_index = 0;  // loop iteration within the round
  StepAction action = StepAction::kTerminate;
  std::optional<ProductId> added;    // j* (exchange) or k* (add)
  std::optional<ProductId> removed;  // i*
  double revenue_after = 0.0;        // oracle value of assortment_after
  Assortment assortment_before;
  Assortment assortment_after;
  std::vector<ProductId> pool_before;
  int universe_size_after = 0;  // candidate pool size after the step
  std::map<ProductId, int> exchange_out_counts;

  friend bool operator==(const IterationRecord&,
                         const IterationRecord&) = default;
};

struct AddExchangeResult {
  Assortment assortment;
  double revenue = 0.0;  // oracle value of `assortment`
  int loop_iterations = 0;
  std::uint64_t oracle_calls = 0;
  std::vector<IterationRecord> trace;
};

// One AddExchange round starting from `start` over `universe`.
// `invocation` only labels trace records.
AddExchangeResult AddExchange(const Assortment& start,
                              std::span<const ProductId> universe, int budget,
                              const RevenueOracle& oracle, bool trace = false,
                              int invocation = 0);

struct SeedTrace {
  Assortment seed;
  std::vector<IterationRecord> steps;

  friend bool operator==(const SeedTrace&, const SeedTrace&) = default;
};

struct SolveReport {
  Assortment best_assortment;
  double best_oracle_revenue = 0.0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t seeds_explored = 0;
  int max_loop_iterations = 0;  // over all AddExchange rounds
  std::optional<std::vector<SeedTrace>> traces;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

// (C - S) * binom(N, S) * (N b + 1) * (C N + N), saturating.
std::uint64_t GreedyOptCallBound(const GreedyConfig& config, int universe_size);
// (N b + 1) * (C N + N) for a single AddExchange round.
std::uint64_t AddExchangeCallBound(int universe_size, int capacity, int budget);

// Seeds are processed concurrently with OpenMP. The merge is deterministic,
// so the report equals GreedyOptSerial's for any thread count.
SolveReport GreedyOpt(const GreedyConfig& config,
                      std::span<const ProductId> universe,
                      const RevenueOracle& oracle, bool trace = false);

// Single-threaded reference implementation.
SolveReport GreedyOptSerial(const GreedyConfig& config,
                            std::span<const ProductId> universe,
                            const RevenueOracle& oracle, bool trace = false);

// Pure greedy additions from the empty set until size C or no strict gain.
Assortment NaiveGreedy(int capacity, std::span<const ProductId> universe,
                       const RevenueOracle& oracle);

}  // namespace assortment

#endif  // ASSORTMENT_GREEDY_H_
