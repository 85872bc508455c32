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

// Reference computations written directly from the model formulas, with no
// calls into the library's solvers. Tests compare the library against these.

#ifndef ASSORTMENT_TESTS_TEST_ORACLES_H_
#define ASSORTMENT_TESTS_TEST_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

struct Item {
  double w;
  double p;
};

// Bit k of `mask` selects items[k], i.e. product id k + 1.
inline double Revenue(const std::vector<Item>& items, std::uint32_t mask) {
  double num = 0.0;
  double den = 1.0;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (mask >> k & 1U) {
      num += items[k].p * items[k].w;
      den += items[k].w;
    }
  }
  return num / den;
}

inline std::vector<int> MaskIds(std::uint32_t mask) {
  std::vector<int> ids;
  for (int k = 0; k < 32; ++k) {
    if (mask >> k & 1U) ids.push_back(k + 1);
  }
  return ids;
}

struct Best {
  std::uint32_t mask = 0;
  double revenue = 0.0;
};

// Exhaustive maximum over all subsets of size <= cap. Ties go to the subset
// whose ascending id list is lexicographically smaller.
inline Best BruteForce(const std::vector<Item>& items, int cap) {
  Best best;
  const std::uint32_t limit = 1U << items.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) > cap) continue;
    const double r = Revenue(items, mask);
    if (r > best.revenue ||
        (r == best.revenue && MaskIds(mask) < MaskIds(best.mask))) {
      best = {mask, r};
    }
  }
  return best;
}

inline double RelativeDiff(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Random items for property tests; independent of the library generator.
inline std::vector<Item> RandomItems(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> log_w(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> price(1.0, 100.0);
  std::vector<Item> items(static_cast<std::size_t>(n));
  for (Item& it : items) {
    it.w = std::exp(log_w(rng));
    it.p = price(rng);
  }
  return items;
}

}  // namespace oracle

#endif  // ASSORTMENT_TESTS_TEST_ORACLES_H_
