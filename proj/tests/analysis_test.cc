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

#include <random>

#include <gtest/gtest.h>

#include "test_oracles.h"

namespace assortment {
namespace {

Instance Three() {
  return Instance({{1, 1.0, 10.0}, {2, 2.0, 6.0}, {3, 0.5, 12.0}});
}

Instance FromItems(const std::vector<oracle::Item>& items) {
  std::vector<Product> products;
  for (std::size_t k = 0; k < items.size(); ++k) {
    products.push_back({static_cast<ProductId>(k + 1), items[k].w, items[k].p});
  }
  return Instance(std::move(products));
}

Instance RandomInstance(std::mt19937_64& rng, int n) {
  return FromItems(oracle::RandomItems(rng, n));
}

TEST(TransformTest, ProductValues) {
  const Instance instance = Three();
  EXPECT_EQ(ProductTransform(instance, 1, 10.0), 0.0);
  EXPECT_EQ(ProductTransform(instance, 1, 4.0), 6.0);
  EXPECT_EQ(ProductTransform(instance, 2, 4.0), 4.0);
  EXPECT_THROW(ProductTransform(instance, 4, 1.0), Error);
}

TEST(TransformTest, AssortmentValues) {
  const Instance one({{1, 1.0, 10.0}});
  EXPECT_EQ(AssortmentTransform(one, {}, 3.0), 0.0);
  EXPECT_EQ(AssortmentTransform(one, {1}, 5.0), 5.0);
}

TEST(TransformTest, IdentityAndFixedPoint) {
  std::mt19937_64 rng(70);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto items = oracle::RandomItems(rng, n);
    const Instance instance = FromItems(items);
    const auto mask = static_cast<std::uint32_t>(rng() & ((1ULL << n) - 1));
    const Assortment m(oracle::MaskIds(mask));
    const double u = std::uniform_real_distribution<double>(-20.0, 120.0)(rng);
    double weight = 1.0;
    for (ProductId id : m) weight += items[id - 1].w;
    const double r = oracle::Revenue(items, mask);
    EXPECT_NEAR(AssortmentTransform(instance, m, u), u + weight * (r - u),
                1e-12 * std::max(1.0, std::abs(u)));
    EXPECT_NEAR(AssortmentTransform(instance, m, r), r, 1e-12 * std::max(1.0, r));
  }
}

TEST(TopSetTest, Examples) {
  const Instance instance = Three();
  EXPECT_TRUE(TopSet(instance, 3, 12.0).empty());
  EXPECT_TRUE(TopSet(instance, 3, 50.0).empty());
  // h = (6, 4, 4) at u = 4; the 2-3 tie goes to 2.
  EXPECT_EQ(TopSet(instance, 2, 4.0), Assortment({1, 2}));
  EXPECT_TRUE(TopSet(instance, 0, 4.0).empty());
  // At u = 11 only product 3 has positive h.
  EXPECT_EQ(TopSet(instance, 2, 11.0), Assortment({3}));
}

TEST(TopSetTest, BreakpointsIncludeCrossingsAndPrices) {
  const std::vector<double> bp = TransformBreakpoints(Three());
  auto has = [&](double v) {
    return std::any_of(bp.begin(), bp.end(),
                       [&](double x) { return std::abs(x - v) < 1e-12; });
  };
  EXPECT_TRUE(has(0.0));
  EXPECT_TRUE(has(10.0));
  EXPECT_TRUE(has(6.0));
  EXPECT_TRUE(has(12.0));
  // h_1 = h_2 at u = (10 - 12) / (1 - 2) = 2; h_2 = h_3 at (12 - 6) / 1.5 = 4.
  EXPECT_TRUE(has(2.0));
  EXPECT_TRUE(has(4.0));
  EXPECT_TRUE(std::is_sorted(bp.begin(), bp.end()));
}

TEST(SlackTopSetTest, Examples) {
  const Instance instance = Three();
  // i_S = 1 with h = 6; slack 0.5 * 4 = 2 admits h >= 4.
  EXPECT_EQ(SlackTopSet(instance, 1, 0.5, 4.0), (std::vector<ProductId>{1, 2, 3}));
  // delta = 0 adds exact ties only: 3 ties 2 at u = 4.
  EXPECT_EQ(SlackTopSet(instance, 2, 0.0, 4.0), (std::vector<ProductId>{1, 2, 3}));
  EXPECT_EQ(SlackTopSet(instance, 1, 0.0, 4.0), (std::vector<ProductId>{1}));
  EXPECT_EQ(SlackTopSet(instance, 1, 1e6, 4.0), (std::vector<ProductId>{1, 2, 3}));
  try {
    SlackTopSet(instance, 2, 0.1, 20.0);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndefined);
  }
}

TEST(MaxSlackTopSetSizeTest, Examples) {
  std::mt19937_64 rng(71);
  const Instance generic = RandomInstance(rng, 7);
  for (int s = 1; s <= 4; ++s) EXPECT_EQ(MaxSlackTopSetSize(generic, s, 0.0), s);
  const Instance same({{1, 2.0, 5.0}, {2, 2.0, 5.0}, {3, 2.0, 5.0}});
  EXPECT_EQ(MaxSlackTopSetSize(same, 1, 0.0), 3);
  EXPECT_EQ(MaxSlackTopSetSize(same, 1, 0.3), 3);
  EXPECT_EQ(MaxSlackTopSetSize(generic, 2, 1e9), 7);
}

TEST(MaxSlackTopSetSizeTest, GridAgreesAndMonotoneInDelta) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Instance instance = RandomInstance(rng, n);
    const int s = 1 + static_cast<int>(rng() % std::min(4, n));
    int previous = 0;
    for (double delta : {0.0, 0.01, 0.05, 0.2, 1.0, 5.0}) {
      const int exact = MaxSlackTopSetSize(instance, s, delta);
      EXPECT_GE(exact, previous);
      EXPECT_GE(exact, s);
      previous = exact;
      // A grid can miss narrow intervals but never exceeds the exact maximum.
      EXPECT_LE(MaxSlackTopSetSizeOnGrid(instance, s, delta), exact);
    }
    EXPECT_EQ(MaxSlackTopSetSizeOnGrid(instance, s, 0.0), s);
  }
}

TEST(BoundsTest, Examples) {
  const Instance instance = Three();
  ExactSolution opt;
  opt.assortment = Assortment({1, 3});
  const GapBound zero = ComputeBounds(instance, 2, 0.0, opt);
  EXPECT_EQ(zero.eta, 0.0);
  EXPECT_EQ(zero.f_value, 0.0);
  EXPECT_FALSE(zero.vacuous());

  // W_2^max = 1 + 2 + 1 = 4; w(opt) = 1 + 1 + 0.5 = 2.5.
  const GapBound b = ComputeBounds(instance, 2, 0.01, opt);
  EXPECT_DOUBLE_EQ(b.max_total_weight, 4.0);
  EXPECT_DOUBLE_EQ(b.optimum_weight, 2.5);
  EXPECT_DOUBLE_EQ(b.eta, 8 * 0.01 / 0.99);
  EXPECT_DOUBLE_EQ(b.f_value, 4.0 / 2.5 * 8 * 0.01 / 0.99);
  EXPECT_DOUBLE_EQ(b.delta_bound, 4.0 * 0.01 / 0.99);

  // Weight ratio 1: the optimum holds the two heaviest products.
  ExactSolution heavy;
  heavy.assortment = Assortment({1, 2});
  EXPECT_NEAR(ComputeBounds(instance, 2, 0.01, heavy).f_value, 0.0808, 1e-4);

  const Instance one({{1, 1.0, 3.0}});
  EXPECT_DOUBLE_EQ(MaxTotalWeight(one, 1), 2.0);
  EXPECT_THROW(ComputeBounds(instance, 2, 1.0, opt), Error);
}

TEST(BoundsTest, ExactDeltaBelowBound) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance instance = RandomInstance(rng, 7);
    NoiseSpec noise;
    noise.mode = NoiseMode::kSeededUniform;
    noise.eps_max = 0.05;
    noise.seed = rng();
    const double exact = ExactDeltaC(instance, 3, noise);
    ExactSolution opt;
    EXPECT_LE(exact, ComputeBounds(instance, 3, 0.05, opt).delta_bound);
    EXPECT_GT(exact, 0.0);
  }
}

TEST(RobustBudgetTest, AtLeastCapacityPlusOne) {
  std::mt19937_64 rng(74);
  const Instance instance = RandomInstance(rng, 8);
  EXPECT_EQ(RobustExchangeBudget(instance, 3, 0.0), 4);
  EXPECT_GE(RobustExchangeBudget(instance, 3, 0.01), 4);
  EXPECT_LE(RobustExchangeBudget(instance, 3, 0.01), 9);
  EXPECT_GE(RobustExchangeBudget(instance, 3, 0.01), RobustExchangeBudget(instance, 3, 0.001));
}

TEST(ComparisonTest, Examples) {
  const Instance instance = Three();
  const ComparisonCheck same = CheckTransformComparison(instance, {1, 2}, {1, 2});
  EXPECT_TRUE(same.holds());
  EXPECT_TRUE(same.transform_order);
  EXPECT_TRUE(same.revenue_order);

  const ComparisonCheck c = CheckTransformComparison(instance, {1}, {2});
  EXPECT_DOUBLE_EQ(c.revenue_1, 5.0);
  EXPECT_DOUBLE_EQ(c.revenue_2, 4.0);
  EXPECT_DOUBLE_EQ(c.transform_1, 6.0);
  EXPECT_DOUBLE_EQ(c.transform_2, 4.0);
  EXPECT_TRUE(c.holds());

  const ComparisonCheck reverse = CheckTransformComparison(instance, {2}, {1});
  EXPECT_FALSE(reverse.revenue_order);
  EXPECT_FALSE(reverse.transform_order);
  EXPECT_TRUE(reverse.holds());
}

TEST(ComparisonTest, RandomPairs) {
  std::mt19937_64 rng(75);
  int strict_true = 0;
  int strict_false = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Instance instance = RandomInstance(rng, n);
    const auto pick = [&] {
      return Assortment(oracle::MaskIds(static_cast<std::uint32_t>(rng() & ((1ULL << n) - 1))));
    };
    const Assortment a = pick();
    const Assortment b = pick();
    const ComparisonCheck c = CheckTransformComparison(instance, a, b);
    EXPECT_TRUE(c.holds());
    if (c.revenue_1 > c.revenue_2) ++strict_true;
    if (c.revenue_1 < c.revenue_2) ++strict_false;
  }
  EXPECT_GT(strict_true, 50);
  EXPECT_GT(strict_false, 50);
}

TEST(TraceInvariantTest, EmptyTraceHasNoViolations) {
  EXPECT_TRUE(CheckTraceInvariants(Three(), {}, 0.0).empty());
}

TEST(TraceInvariantTest, DetectsBadExchange) {
  const Instance instance = Three();
  // Exchanging out 1 (the strongest product at any u < 10) is never chosen by
  // the exact greedy; the check must flag it.
  IterationRecord r;
  r.action = StepAction::kExchange;
  r.assortment_before = Assortment({1, 2});
  r.pool_before = {3};
  r.added = 3;
  r.removed = 1;
  r.assortment_after = Assortment({2, 3});
  r.revenue_after = MnlRevenue(instance, r.assortment_after);
  const std::vector<IterationRecord> trace = {r};
  const auto violations = CheckTraceInvariants(instance, trace, 0.0);
  ASSERT_FALSE(violations.empty());
  EXPECT_EQ(violations[0].kind, "exchanged_out");
  EXPECT_EQ(violations[0].chosen, 1);
  EXPECT_EQ(violations[0].rival, 2);
}

TEST(TraceInvariantTest, RejectsMalformedTrace) {
  IterationRecord r;
  r.action = StepAction::kExchange;
  r.assortment_before = Assortment({1});
  r.pool_before = {2};
  r.added = 2;  // removed missing
  r.assortment_after = Assortment({2});
  const std::vector<IterationRecord> trace = {r};
  try {
    CheckTraceInvariants(Three(), trace, 0.0);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedTrace);
  }
}

TEST(TraceInvariantTest, ExactAndNoisyGreedyTracesConform) {
  std::mt19937_64 rng(76);
  std::size_t steps = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Instance instance = RandomInstance(rng, n);
    const int c = 1 + static_cast<int>(rng() % std::min(4, n));
    const GreedyConfig config{0, c, c + 1};
    const SolveReport exact =
        GreedyOpt(config, instance.ids(), *MakeExactOracle(instance), true);
    for (const SeedTrace& t : *exact.traces) {
      steps += t.steps.size();
      EXPECT_TRUE(CheckTraceInvariants(instance, t.steps, 0.0).empty());
    }

    NoiseSpec noise;
    noise.mode = NoiseMode::kSeededUniform;
    noise.eps_max = trial % 2 == 0 ? 0.001 : 0.01;
    noise.seed = rng();
    const OraclePtr noisy = MakeNoisyOracle(MakeExactOracle(instance), noise);
    const SolveReport r = GreedyOpt(config, instance.ids(), *noisy, true);
    const ExactSolution opt;
    const double delta = ComputeBounds(instance, c, noise.eps_max, opt).delta_bound;
    for (const SeedTrace& t : *r.traces) {
      EXPECT_TRUE(CheckTraceInvariants(instance, t.steps, delta).empty());
    }
  }
  EXPECT_GT(steps, 400u);
}

TEST(TopSetMonotonicityTest, Examples) {
  const Instance instance = Three();
  const TopSetMonotonicityCheck same = CheckTopSetMonotonicity(instance, 2, 3.0, 3.0);
  EXPECT_EQ(same.size_at_u1, same.size_at_u2);
  EXPECT_TRUE(same.holds());
  const TopSetMonotonicityCheck high = CheckTopSetMonotonicity(instance, 2, 1.0, 13.0);
  EXPECT_EQ(high.size_at_u2, 0);
  EXPECT_TRUE(high.holds());
}

TEST(TopSetMonotonicityTest, RandomPairsWithOptimumBracket) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Instance instance = RandomInstance(rng, n);
    const int s = 1 + static_cast<int>(rng() % std::min(4, n));
    const ExactSolution opt =
        BruteForceOptSerial(*MakeExactOracle(instance), instance.ids(), s);
    std::uniform_real_distribution<double> draw(0.0, 110.0);
    double u1 = draw(rng);
    double u2 = draw(rng);
    if (u1 > u2) std::swap(u1, u2);
    const TopSetMonotonicityCheck c = CheckTopSetMonotonicity(instance, s, u1, u2, &opt);
    EXPECT_TRUE(c.holds()) << "trial " << trial;
    EXPECT_GE(c.size_at_u1, c.size_at_u2);
    // The optimum is itself a top set at its own revenue.
    EXPECT_EQ(TopSet(instance, s, opt.revenue), opt.assortment);
  }
}

}  // namespace
}  // namespace assortment
