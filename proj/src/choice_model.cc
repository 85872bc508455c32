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

#include "assortment/choice_model.h"

#include <cmath>

#include "assortment/hash.h"

namespace assortment {

double TotalWeight(const Instance& instance, const Assortment& m) {
  double total = 1.0;
  for (ProductId id : m) total += instance.product(id).weight;
  return total;
}

double MnlRevenue(const Instance& instance, const Assortment& m) {
  double numerator = 0.0;
  double denominator = 1.0;
  for (ProductId id : m) {
    const Product& p = instance.product(id);
    numerator += p.price * p.weight;
    denominator += p.weight;
  }
  return numerator / denominator;
}

double MnlChoiceProbability(const Instance& instance, const Assortment& m,
                            ProductId choice) {
  ValidateAssortment(instance, m);
  const double denominator = TotalWeight(instance, m);
  if (choice == kNoPurchase) return 1.0 / denominator;
  if (!m.contains(choice)) {
    throw Error(ErrorCode::kInvalidChoice,
                "product " + std::to_string(choice) +
                    " is not offered in assortment {" + m.encode() + "}");
  }
  return instance.product(choice).weight / denominator;
}

double MnlOracle::evaluate(const Assortment& m) const {
  return MnlRevenue(instance_, m);
}

OraclePtr MakeExactOracle(const Instance& instance) {
  return std::make_shared<MnlOracle>(instance);
}

std::string_view NoiseModeName(NoiseMode mode) {
  switch (mode) {
    case NoiseMode::kNone: return "none";
    case NoiseMode::kFixed: return "fixed";
    case NoiseMode::kSeededUniform: return "seeded-uniform";
  }
  return "none";
}

NoiseMode ParseNoiseMode(std::string_view name) {
  if (name == "none") return NoiseMode::kNone;
  if (name == "fixed") return NoiseMode::kFixed;
  if (name == "seeded-uniform") return NoiseMode::kSeededUniform;
  throw Error(ErrorCode::kInvalidConfig,
              "unknown noise mode '" + std::string(name) + "'");
}

void NoiseSpec::Validate() const {
  auto ok = [](double e) { return e >= 0.0 && e < 1.0; };
  if (!ok(eps_fixed) || !ok(eps_max)) {
    throw Error(ErrorCode::kInvalidConfig, "noise rates must lie in [0, 1)");
  }
}

double NoiseSpec::MaxEpsilon() const {
  switch (mode) {
    case NoiseMode::kNone: return 0.0;
    case NoiseMode::kFixed: return eps_fixed;
    case NoiseMode::kSeededUniform: return eps_max;
  }
  return 0.0;
}

double NoiseEpsilon(const NoiseSpec& spec, const Assortment& m) {
  switch (spec.mode) {
    case NoiseMode::kNone:
      return 0.0;
    case NoiseMode::kFixed:
      return spec.eps_fixed;
    case NoiseMode::kSeededUniform: {
      const std::uint64_t bits =
          SplitMix64(Fnv1a64(m.encode()) ^ SplitMix64(spec.seed));
      return spec.eps_max * UnitInterval(bits);
    }
  }
  return 0.0;
}

NoisyOracle::NoisyOracle(OraclePtr base, NoiseSpec spec)
    : base_(std::move(base)), spec_(spec) {
  spec_.Validate();
}

double NoisyOracle::evaluate(const Assortment& m) const {
  const double exact = base_->evaluate(m);
  if (spec_.mode == NoiseMode::kNone) return exact;
  return (1.0 - NoiseEpsilon(spec_, m)) * exact;
}

OraclePtr MakeNoisyOracle(OraclePtr base, const NoiseSpec& spec) {
  return std::make_shared<NoisyOracle>(std::move(base), spec);
}

double CountingOracle::evaluate(const Assortment& m) const {
  calls_.fetch_add(1, std::memory_order_relaxed);
  {
    std::lock_guard<std::mutex> lock(seen_mutex_);
    seen_.insert(m.encode());
  }
  return base_->evaluate(m);
}

OracleStats CountingOracle::stats() const {
  std::lock_guard<std::mutex> lock(seen_mutex_);
  return OracleStats{calls_.load(std::memory_order_relaxed), seen_.size()};
}

void CountingOracle::Reset() {
  std::lock_guard<std::mutex> lock(seen_mutex_);
  calls_.store(0, std::memory_order_relaxed);
  seen_.clear();
}

std::shared_ptr<CountingOracle> MakeCountingOracle(OraclePtr base) {
  return std::make_shared<CountingOracle>(std::move(base));
}

}  // namespace assortment
