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

// Revenue oracles. The greedy solvers see the choice model only through
// RevenueOracle::evaluate, so any model (MNL, nested logit, a simulator) can
// be plugged in. The built-in oracles are the exact MNL revenue, a
// multiplicative-noise wrapper and a call-counting wrapper.

#ifndef ASSORTMENT_CHOICE_MODEL_H_
#define ASSORTMENT_CHOICE_MODEL_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_set>

#include "assortment/assortment.h"

namespace assortment {

// Expected revenue of offering an assortment. Implementations must be pure
// functions of the assortment and safe to call concurrently.
class RevenueOracle {
 public:
  virtual ~RevenueOracle() = default;
  virtual double evaluate(const Assortment& m) const = 0;
};

using OraclePtr = std::shared_ptr<const RevenueOracle>;

// sum_{i in M} p_i w_i / (1 + sum_{i in M} w_i); 0 for the empty set.
double MnlRevenue(const Instance& instance, const Assortment& m);

// 1 + sum of member weights (the no-purchase option contributes 1).
double TotalWeight(const Instance& instance, const Assortment& m);

// Probability that a customer offered `m` picks `choice`, where `choice` is a
// member of `m` or kNoPurchase.
double MnlChoiceProbability(const Instance& instance, const Assortment& m,
                            ProductId choice);

class MnlOracle final : public RevenueOracle {
 public:
  explicit MnlOracle(Instance instance) : instance_(std::move(instance)) {}
  double evaluate(const Assortment& m) const override;
  const Instance& instance() const { return instance_; }

 private:
  Instance instance_;
};

OraclePtr MakeExactOracle(const Instance& instance);

enum class NoiseMode { kNone, kFixed, kSeededUniform };

std::string_view NoiseModeName(NoiseMode mode);
NoiseMode ParseNoiseMode(std::string_view name);

struct NoiseSpec {
  NoiseMode mode = NoiseMode::kNone;
  double eps_fixed = 0.0;
  double eps_max = 0.0;
  std::uint64_t seed = 0;

  // Throws kInvalidConfig unless both rates lie in [0, 1).
  void Validate() const;
  // Upper bound on epsilon(M) over all assortments.
  double MaxEpsilon() const;

  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

// epsilon(M) for the given spec. For kSeededUniform this hashes
// (seed, m.encode()) into [0, eps_max).
double NoiseEpsilon(const NoiseSpec& spec, const Assortment& m);

// Returns (1 - epsilon(M)) * base(M).
class NoisyOracle final : public RevenueOracle {
 public:
  NoisyOracle(OraclePtr base, NoiseSpec spec);
  double evaluate(const Assortment& m) const override;
  double epsilon(const Assortment& m) const { return NoiseEpsilon(spec_, m); }
  const NoiseSpec& spec() const { return spec_; }

 private:
  OraclePtr base_;
  NoiseSpec spec_;
};

OraclePtr MakeNoisyOracle(OraclePtr base, const NoiseSpec& spec);

struct OracleStats {
  std::uint64_t call_count = 0;
  std::uint64_t distinct_count = 0;
};

// Transparent wrapper that counts evaluate calls and distinct assortments.
class CountingOracle final : public RevenueOracle {
 public:
  explicit CountingOracle(OraclePtr base) : base_(std::move(base)) {}
  double evaluate(const Assortment& m) const override;
  OracleStats stats() const;
  void Reset();

 private:
  OraclePtr base_;
  mutable std::atomic<std::uint64_t> calls_{0};
  mutable std::mutex seen_mutex_;
  mutable std::unordered_set<std::string> seen_;
};

std::shared_ptr<CountingOracle> MakeCountingOracle(OraclePtr base);

}  // namespace assortment

#endif  // ASSORTMENT_CHOICE_MODEL_H_
