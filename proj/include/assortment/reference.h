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

// Exact reference solvers. These are ground truth for the test suites, so
// they never approximate: exhaustive search refuses oversized problems
// instead of sampling.

#ifndef ASSORTMENT_REFERENCE_H_
#define ASSORTMENT_REFERENCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "assortment/assortment.h"
#include "assortment/choice_model.h"
#include "assortment/instance_io.h"

namespace assortment {

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

struct SizeOptimum {
  Assortment assortment;
  double revenue = 0.0;

  friend bool operator==(const SizeOptimum&, const SizeOptimum&) = default;
};

struct ExactSolution {
  Assortment assortment;
  double revenue = 0.0;
  // Entry k is the best assortment of size <= k, for k = 0..C.
  std::vector<SizeOptimum> per_size_optima;
  std::uint64_t assortments_evaluated = 0;

  friend bool operator==(const ExactSolution&, const ExactSolution&) = default;
};

// sum_{k <= C} binom(N, k), saturating.
std::uint64_t EnumerationSize(int universe_size, int capacity);

// Exhaustive search over all assortments of size <= C, split across OpenMP
// threads. Ties go to the lexicographically smallest assortment. Throws
// kEnumerationCap when the search space exceeds `cap`.
ExactSolution BruteForceOpt(const RevenueOracle& oracle,
                            std::span<const ProductId> universe, int capacity,
                            std::uint64_t cap = kDefaultEnumerationCap);

// Single-threaded reference for BruteForceOpt.
ExactSolution BruteForceOptSerial(const RevenueOracle& oracle,
                                  std::span<const ProductId> universe,
                                  int capacity,
                                  std::uint64_t cap = kDefaultEnumerationCap);

struct CandidateSetResult {
  ExactSolution solution;
  // Distinct B_C(u) over u >= 0, in order of first appearance as u grows.
  std::vector<Assortment> candidates;
};

// MNL-specific exact solver: the optimum of size <= C is one of the top sets
// B_C(u), which only change at transform breakpoints.
CandidateSetResult CandidateSetOpt(const Instance& instance, int capacity);

struct NestingWitness {
  Instance instance;
  int smaller_capacity = 0;  // c1
  int larger_capacity = 0;   // c2 > c1
  Assortment smaller_optimum;
  Assortment larger_optimum;
  int attempt = 0;
  std::uint64_t instance_seed = 0;
};

// Samples instances (attempt a uses DeriveSeed(seed, a)) until the optimum of
// size <= c1 is not contained in the optimum of size <= c2 for some
// c1 < c2 <= C. Attempts run concurrently; the lowest successful attempt wins.
std::optional<NestingWitness> FindNestingWitness(
    std::uint64_t seed, int universe_size, int capacity, int attempts,
    const GeneratorSpec& ranges = GeneratorSpec{});

// Recomputes both optima by brute force and checks non-containment.
bool VerifyNestingWitness(const NestingWitness& witness);

}  // namespace assortment

#endif  // ASSORTMENT_REFERENCE_H_
