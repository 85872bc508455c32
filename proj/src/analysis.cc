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

#include "assortment/analysis.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "assortment/combinatorics.h"

namespace assortment {
namespace {

constexpr double kRelativeTolerance = 1e-9;

bool Exceeds(double lhs, double rhs) {
  return lhs > rhs + kRelativeTolerance * (1.0 + std::abs(lhs) + std::abs(rhs));
}

std::vector<double> SlackBreakpoints(const Instance& instance, double delta) {
  std::vector<double> points = TransformBreakpoints(instance);
  const auto products = instance.products();
  for (const Product& a : products) {
    for (const Product& b : products) {
      if (a.id == b.id) continue;
      // h_a(u) - h_b(u) = delta u
      const double denominator = a.weight - b.weight + delta;
      if (denominator == 0.0) continue;
      const double u = (a.price * a.weight - b.price * b.weight) / denominator;
      if (u > 0.0 && std::isfinite(u)) points.push_back(u);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

int SlackTopSetSizeOrZero(const Instance& instance, int max_size, double delta,
                          double u) {
  if (TopSet(instance, max_size, u).empty()) return 0;
  return static_cast<int>(SlackTopSet(instance, max_size, delta, u).size());
}

}  // namespace

double MaxTotalWeight(const Instance& instance, int capacity) {
  std::vector<double> weights;
  for (const Product& p : instance.products()) weights.push_back(p.weight);
  std::sort(weights.begin(), weights.end(), std::greater<>());
  double total = 1.0;
  const auto take = std::min<std::size_t>(
      weights.size(), static_cast<std::size_t>(std::max(capacity, 0)));
  for (std::size_t k = 0; k < take; ++k) total += weights[k];
  return total;
}

GapBound ComputeBounds(const Instance& instance, int capacity, double eps_max,
                       const ExactSolution& optimum) {
  if (!(eps_max >= 0.0 && eps_max < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "eps_max must lie in [0, 1)");
  }
  GapBound bound;
  bound.capacity = capacity;
  bound.eps_max = eps_max;
  bound.max_total_weight = MaxTotalWeight(instance, capacity);
  bound.optimum_weight = TotalWeight(instance, optimum.assortment);
  const double odds = eps_max / (1.0 - eps_max);
  bound.delta_bound = bound.max_total_weight * odds;
  bound.eta = 4.0 * capacity * odds;
  bound.f_value = (bound.max_total_weight / bound.optimum_weight) * bound.eta;
  return bound;
}

double ExactDeltaC(const Instance& instance, int capacity,
                   const NoiseSpec& noise) {
  if (instance.size() > 12) {
    throw Error(ErrorCode::kEnumerationCap,
                "exact delta_C enumeration is limited to N <= 12");
  }
  const std::vector<ProductId> ids = instance.ids();
  double delta = 0.0;
  for (int k = 0; k <= std::min(capacity, instance.size()); ++k) {
    for (const Assortment& m : Combinations(ids, k)) {
      const double eps = NoiseEpsilon(noise, m);
      delta = std::max(delta, TotalWeight(instance, m) * eps / (1.0 - eps));
    }
  }
  return delta;
}

std::vector<ProductId> SlackTopSet(const Instance& instance, int max_size,
                                   double delta, double u) {
  const Assortment top = TopSet(instance, max_size, u);
  if (top.empty()) {
    throw Error(ErrorCode::kUndefined,
                "top set is empty at u=" + std::to_string(u) +
                    "; its weakest member is undefined");
  }
  double weakest = std::numeric_limits<double>::infinity();
  for (ProductId id : top) {
    weakest = std::min(weakest, ProductTransform(instance, id, u));
  }
  std::vector<ProductId> out;
  for (ProductId id : instance.ids()) {
    if (top.contains(id) ||
        weakest - ProductTransform(instance, id, u) <= delta * u) {
      out.push_back(id);
    }
  }
  return out;
}

int MaxSlackTopSetSize(const Instance& instance, int max_size, double delta) {
  if (delta < 0.0) throw Error(ErrorCode::kInvalidConfig, "delta must be >= 0");
  int best = 0;
  for (double u : IntervalSamples(SlackBreakpoints(instance, delta))) {
    if (u <= 0.0) continue;
    best = std::max(best, SlackTopSetSizeOrZero(instance, max_size, delta, u));
  }
  return best;
}

int MaxSlackTopSetSizeOnGrid(const Instance& instance, int max_size,
                             double delta, int points) {
  double max_price = 0.0;
  for (const Product& p : instance.products()) max_price = std::max(max_price, p.price);
  int best = 0;
  for (int k = 1; k < points; ++k) {
    const double u = max_price * k / (points - 1);
    best = std::max(best, SlackTopSetSizeOrZero(instance, max_size, delta, u));
  }
  return best;
}

int RobustExchangeBudget(const Instance& instance, int capacity,
                         double eps_max) {
  const double delta_bound =
      MaxTotalWeight(instance, capacity) * eps_max / (1.0 - eps_max);
  return std::max(capacity + 1,
                  MaxSlackTopSetSize(instance, capacity, 2.0 * delta_bound) + 1);
}

ComparisonCheck CheckTransformComparison(const Instance& instance,
                                         const Assortment& m1,
                                         const Assortment& m2) {
  ValidateAssortment(instance, m1);
  ValidateAssortment(instance, m2);
  ComparisonCheck check;
  check.revenue_1 = MnlRevenue(instance, m1);
  check.revenue_2 = MnlRevenue(instance, m2);
  const double u2 = check.revenue_2;
  check.transform_1 = AssortmentTransform(instance, m1, u2);
  check.transform_2 = AssortmentTransform(instance, m2, u2);
  check.transform_order = check.transform_1 >= check.transform_2;
  check.revenue_order = check.revenue_1 >= check.revenue_2;
  check.near_tie = std::abs(check.revenue_1 - check.revenue_2) <=
                   1e-12 * std::max(1.0, std::abs(u2));
  return check;
}

std::vector<TraceViolation> CheckTraceInvariants(
    const Instance& instance, std::span<const IterationRecord> trace,
    double delta_c) {
  std::vector<TraceViolation> violations;
  for (const IterationRecord& r : trace) {
    if (r.action == StepAction::kTerminate) continue;
    const bool is_exchange = r.action == StepAction::kExchange;
    if (!r.added || (is_exchange != r.removed.has_value())) {
      throw Error(ErrorCode::kMalformedTrace,
                  "step " + std::to_string(r.step_index) +
                      " lacks the product ids its action requires");
    }
    const Assortment expected = is_exchange
        ? r.assortment_before.exchanged(*r.removed, *r.added)
        : r.assortment_before.with(*r.added);
    if (expected != r.assortment_after) {
      throw Error(ErrorCode::kMalformedTrace,
                  "step " + std::to_string(r.step_index) +
                      " does not transform its pre-step assortment as recorded");
    }
    ValidateAssortment(instance, r.assortment_after);

    const double u = MnlRevenue(instance, r.assortment_after);
    const double slack = delta_c * u;
    auto h = [&](ProductId id) { return ProductTransform(instance, id, u); };

    const double entering = h(*r.added);
    for (ProductId j : r.pool_before) {
      if (j == *r.added) continue;
      if (Exceeds(h(j) - slack, entering)) {
        violations.push_back({r.invocation, r.step_index, "entering", *r.added,
                              j, entering, h(j), slack});
      }
    }
    if (is_exchange) {
      const double leaving = h(*r.removed);
      for (ProductId i : r.assortment_before) {
        if (i == *r.removed) continue;
        if (Exceeds(leaving, h(i) + slack)) {
          violations.push_back({r.invocation, r.step_index, "exchanged_out",
                                *r.removed, i, leaving, h(i), slack});
        }
      }
    }
  }
  return violations;
}

TopSetMonotonicityCheck CheckTopSetMonotonicity(const Instance& instance,
                                                int max_size, double u1,
                                                double u2,
                                                const ExactSolution* optimum) {
  if (!(u1 >= 0.0 && u1 <= u2)) {
    throw Error(ErrorCode::kInvalidConfig, "need 0 <= u1 <= u2");
  }
  TopSetMonotonicityCheck check;
  check.size_at_u1 = TopSet(instance, max_size, u1).size();
  check.size_at_u2 = TopSet(instance, max_size, u2).size();
  check.monotone = check.size_at_u1 >= check.size_at_u2;
  if (optimum) {
    if (static_cast<int>(optimum->per_size_optima.size()) <= max_size) {
      throw Error(ErrorCode::kInvalidConfig,
                  "optimum lacks per-size optima up to S");
    }
    const SizeOptimum& opt =
        optimum->per_size_optima[static_cast<std::size_t>(max_size)];
    for (auto [u, size] : {std::pair{u1, check.size_at_u1},
                           std::pair{u2, check.size_at_u2}}) {
      if (u > opt.revenue) continue;
      ++check.bracket_points_checked;
      if (size > max_size || size < opt.assortment.size()) {
        check.bracket_holds = false;
      }
    }
  }
  return check;
}

}  // namespace assortment
