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

#include "assortment/reference.h"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "assortment/combinatorics.h"
#include "assortment/hash.h"
#include "assortment/parallel.h"
#include "assortment/transform.h"

namespace assortment {
namespace {

constexpr double kUnset = -std::numeric_limits<double>::infinity();

std::vector<ProductId> SortedUnique(std::span<const ProductId> ids) {
  std::vector<ProductId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Total order used everywhere an argmax needs a tie-break.
void Offer(SizeOptimum& best, const Assortment& m, double revenue) {
  if (revenue > best.revenue ||
      (revenue == best.revenue && m < best.assortment)) {
    best.assortment = m;
    best.revenue = revenue;
  }
}

std::vector<SizeOptimum> EmptyBests(int capacity) {
  return std::vector<SizeOptimum>(static_cast<std::size_t>(capacity) + 1,
                                  SizeOptimum{Assortment(), kUnset});
}

void CheckArguments(int universe_size, int capacity, std::uint64_t cap) {
  if (capacity < 0 || capacity > universe_size) {
    throw Error(ErrorCode::kInvalidConfig,
                "capacity " + std::to_string(capacity) + " outside [0, N]");
  }
  const std::uint64_t total = EnumerationSize(universe_size, capacity);
  if (total > cap) {
    throw Error(ErrorCode::kEnumerationCap,
                "exhaustive search over " + std::to_string(total) +
                    " assortments exceeds the cap of " + std::to_string(cap));
  }
}

// exact_size[k] holds the best assortment of size exactly k; fold into
// "size <= k" optima.
ExactSolution Finish(std::vector<SizeOptimum> exact_size,
                     std::uint64_t evaluated) {
  ExactSolution solution;
  solution.assortments_evaluated = evaluated;
  SizeOptimum running{Assortment(), kUnset};
  for (const SizeOptimum& s : exact_size) {
    Offer(running, s.assortment, s.revenue);
    solution.per_size_optima.push_back(running);
  }
  solution.assortment = running.assortment;
  solution.revenue = running.revenue;
  return solution;
}

}  // namespace

std::uint64_t EnumerationSize(int universe_size, int capacity) {
  std::uint64_t total = 0;
  for (int k = 0; k <= capacity; ++k) {
    const std::uint64_t b = Binomial(universe_size, k);
    if (total > std::numeric_limits<std::uint64_t>::max() - b) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total += b;
  }
  return total;
}

ExactSolution BruteForceOptSerial(const RevenueOracle& oracle,
                                  std::span<const ProductId> universe,
                                  int capacity, std::uint64_t cap) {
  const std::vector<ProductId> items = SortedUnique(universe);
  CheckArguments(static_cast<int>(items.size()), capacity, cap);
  std::vector<SizeOptimum> best = EmptyBests(capacity);
  std::uint64_t evaluated = 0;
  for (int k = 0; k <= capacity; ++k) {
    for (const Assortment& m : Combinations(items, k)) {
      Offer(best[static_cast<std::size_t>(k)], m, oracle.evaluate(m));
      ++evaluated;
    }
  }
  return Finish(std::move(best), evaluated);
}

ExactSolution BruteForceOpt(const RevenueOracle& oracle,
                            std::span<const ProductId> universe, int capacity,
                            std::uint64_t cap) {
  const std::vector<ProductId> items = SortedUnique(universe);
  const int n = static_cast<int>(items.size());
  CheckArguments(n, capacity, cap);

  // Flat index space: sizes 0..C back to back, each in lexicographic order.
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(capacity) + 2, 0);
  for (int k = 0; k <= capacity; ++k) {
    offsets[static_cast<std::size_t>(k) + 1] =
        offsets[static_cast<std::size_t>(k)] + Binomial(n, k);
  }
  const auto total = static_cast<std::int64_t>(offsets.back());

  std::vector<SizeOptimum> best = EmptyBests(capacity);
  LoopErrors errors;
#pragma omp parallel
  {
    std::vector<SizeOptimum> local = EmptyBests(capacity);
#pragma omp for schedule(static)
    for (std::int64_t flat = 0; flat < total; ++flat) {
      try {
        const auto index = static_cast<std::uint64_t>(flat);
        const auto k = static_cast<int>(
            std::upper_bound(offsets.begin(), offsets.end(), index) -
            offsets.begin() - 1);
        const Assortment m = UnrankCombination(
            items, k, index - offsets[static_cast<std::size_t>(k)]);
        Offer(local[static_cast<std::size_t>(k)], m, oracle.evaluate(m));
      } catch (...) {
        errors.Capture(static_cast<std::size_t>(flat));
      }
    }
#pragma omp critical(assortment_brute_force_merge)
    for (std::size_t k = 0; k < local.size(); ++k) {
      if (local[k].revenue != kUnset) {
        Offer(best[k], local[k].assortment, local[k].revenue);
      }
    }
  }
  errors.RethrowIfAny();
  return Finish(std::move(best), static_cast<std::uint64_t>(total));
}

CandidateSetResult CandidateSetOpt(const Instance& instance, int capacity) {
  if (capacity < 0 || capacity > instance.size()) {
    throw Error(ErrorCode::kInvalidConfig,
                "capacity " + std::to_string(capacity) + " outside [0, N]");
  }
  const std::vector<double> samples =
      BreakpointSamples(TransformBreakpoints(instance));

  CandidateSetResult result;
  std::vector<SizeOptimum> best = EmptyBests(capacity);
  std::uint64_t evaluated = 0;
  for (int k = 0; k <= capacity; ++k) {
    std::set<Assortment> seen;
    for (double u : samples) {
      Assortment m = TopSet(instance, k, u);
      if (!seen.insert(m).second) continue;
      Offer(best[static_cast<std::size_t>(k)], m, MnlRevenue(instance, m));
      ++evaluated;
      if (k == capacity) result.candidates.push_back(m);
    }
  }
  // best[k] already ranges over sets of size <= k; Finish keeps it that way.
  result.solution = Finish(std::move(best), evaluated);
  return result;
}

namespace {

std::optional<NestingWitness> CheckNesting(const Instance& instance,
                                           int capacity) {
  const OraclePtr oracle = MakeExactOracle(instance);
  const ExactSolution exact =
      BruteForceOptSerial(*oracle, instance.ids(), capacity);
  for (int c1 = 1; c1 < capacity; ++c1) {
    for (int c2 = c1 + 1; c2 <= capacity; ++c2) {
      const Assortment& small = exact.per_size_optima[static_cast<std::size_t>(c1)].assortment;
      const Assortment& large = exact.per_size_optima[static_cast<std::size_t>(c2)].assortment;
      if (!small.is_subset_of(large)) {
        NestingWitness w;
        w.instance = instance;
        w.smaller_capacity = c1;
        w.larger_capacity = c2;
        w.smaller_optimum = small;
        w.larger_optimum = large;
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<NestingWitness> FindNestingWitness(std::uint64_t seed,
                                                 int universe_size,
                                                 int capacity, int attempts,
                                                 const GeneratorSpec& ranges) {
  if (attempts <= 0 || universe_size < 2 || capacity < 2) return std::nullopt;
  if (capacity > universe_size) {
    throw Error(ErrorCode::kInvalidConfig, "capacity exceeds N");
  }
  constexpr int kBatch = 64;
  for (int first = 0; first < attempts; first += kBatch) {
    const int last = std::min(attempts, first + kBatch);
    std::vector<std::optional<NestingWitness>> found(
        static_cast<std::size_t>(last - first));
    LoopErrors errors;
#pragma omp parallel for schedule(dynamic)
    for (int a = first; a < last; ++a) {
      try {
        GeneratorSpec spec = ranges;
        spec.n = universe_size;
        spec.capacity = capacity;
        spec.seed = DeriveSeed(seed, static_cast<std::uint64_t>(a));
        auto w = CheckNesting(GenerateInstance(spec), capacity);
        if (w) {
          w->attempt = a;
          w->instance_seed = spec.seed;
        }
        found[static_cast<std::size_t>(a - first)] = std::move(w);
      } catch (...) {
        errors.Capture(static_cast<std::size_t>(a));
      }
    }
    errors.RethrowIfAny();
    for (auto& w : found) {
      if (w) return std::move(w);
    }
  }
  return std::nullopt;
}

bool VerifyNestingWitness(const NestingWitness& witness) {
  const int c1 = witness.smaller_capacity;
  const int c2 = witness.larger_capacity;
  if (c1 < 0 || c1 >= c2 || c2 > witness.instance.size()) return false;
  const OraclePtr oracle = MakeExactOracle(witness.instance);
  const ExactSolution exact =
      BruteForceOptSerial(*oracle, witness.instance.ids(), c2);
  const SizeOptimum& small = exact.per_size_optima[static_cast<std::size_t>(c1)];
  const SizeOptimum& large = exact.per_size_optima[static_cast<std::size_t>(c2)];
  return small.assortment == witness.smaller_optimum &&
         large.assortment == witness.larger_optimum &&
         !small.assortment.is_subset_of(large.assortment);
}

}  // namespace assortment
