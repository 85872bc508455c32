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

#ifndef ASSORTMENT_COMBINATORICS_H_
#define ASSORTMENT_COMBINATORICS_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "assortment/assortment.h"

namespace assortment {

// binom(n, k), saturating at uint64 max.
inline std::uint64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t numerator = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / numerator) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * numerator / static_cast<std::uint64_t>(i);
  }
  return result;
}

// The `rank`-th k-subset of `items` in lexicographic order of positions.
inline Assortment UnrankCombination(std::span<const ProductId> items, int k,
                                    std::uint64_t rank) {
  std::vector<ProductId> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  const int n = static_cast<int>(items.size());
  int next = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (int candidate = next; candidate < n; ++candidate) {
      const std::uint64_t block = Binomial(n - candidate - 1, k - slot - 1);
      if (rank < block) {
        chosen.push_back(items[static_cast<std::size_t>(candidate)]);
        next = candidate + 1;
        break;
      }
      rank -= block;
    }
  }
  return Assortment(std::move(chosen));
}

// All k-subsets of `items`, lexicographic.
inline std::vector<Assortment> Combinations(std::span<const ProductId> items,
                                            int k) {
  std::vector<Assortment> out;
  const std::uint64_t count = Binomial(static_cast<int>(items.size()), k);
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) {
    out.push_back(UnrankCombination(items, k, r));
  }
  return out;
}

}  // namespace assortment

#endif  // ASSORTMENT_COMBINATORICS_H_
