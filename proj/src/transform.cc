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

#include "assortment/transform.h"

#include <algorithm>
#include <cmath>

namespace assortment {

double ProductTransform(const Instance& instance, ProductId id, double u) {
  const Product& p = instance.product(id);
  return (p.price - u) * p.weight;
}

double AssortmentTransform(const Instance& instance, const Assortment& m,
                           double u) {
  double total = 0.0;
  for (ProductId id : m) total += ProductTransform(instance, id, u);
  return total;
}

std::vector<ProductId> RankByTransform(const Instance& instance, double u) {
  std::vector<ProductId> order = instance.ids();
  std::vector<double> h(order.size() + 1, 0.0);
  for (ProductId id : order) h[static_cast<std::size_t>(id)] = ProductTransform(instance, id, u);
  std::stable_sort(order.begin(), order.end(), [&](ProductId a, ProductId b) {
    return h[static_cast<std::size_t>(a)] > h[static_cast<std::size_t>(b)];
  });
  return order;
}

Assortment TopSet(const Instance& instance, int max_size, double u) {
  std::vector<ProductId> chosen;
  if (max_size <= 0) return Assortment();
  for (ProductId id : RankByTransform(instance, u)) {
    if (static_cast<int>(chosen.size()) == max_size) break;
    if (!(ProductTransform(instance, id, u) > 0.0)) break;
    chosen.push_back(id);
  }
  return Assortment(std::move(chosen));
}

std::vector<double> TransformBreakpoints(const Instance& instance) {
  std::vector<double> points{0.0};
  const auto products = instance.products();
  for (std::size_t a = 0; a < products.size(); ++a) {
    points.push_back(products[a].price);
    for (std::size_t b = a + 1; b < products.size(); ++b) {
      const double dw = products[a].weight - products[b].weight;
      if (dw == 0.0) continue;
      const double u = (products[a].price * products[a].weight -
                        products[b].price * products[b].weight) /
                       dw;
      if (u >= 0.0 && std::isfinite(u)) points.push_back(u);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<double> BreakpointSamples(const std::vector<double>& breakpoints) {
  std::vector<double> samples;
  samples.reserve(2 * breakpoints.size() + 1);
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    samples.push_back(breakpoints[k]);
    if (k + 1 < breakpoints.size()) {
      samples.push_back(0.5 * (breakpoints[k] + breakpoints[k + 1]));
    }
  }
  if (!breakpoints.empty()) samples.push_back(breakpoints.back() + 1.0);
  return samples;
}

std::vector<double> IntervalSamples(const std::vector<double>& breakpoints) {
  std::vector<double> samples;
  samples.reserve(breakpoints.size() + 1);
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    samples.push_back(0.5 * (breakpoints[k] + breakpoints[k + 1]));
  }
  if (!breakpoints.empty()) samples.push_back(breakpoints.back() + 1.0);
  return samples;
}

}  // namespace assortment
