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

#include <random>

#include <gtest/gtest.h>

#include "assortment/combinatorics.h"
#include "assortment/parallel.h"
#include "fixtures.h"
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

TEST(CombinatoricsTest, BinomialAndUnranking) {
  EXPECT_EQ(Binomial(5, 2), 10u);
  EXPECT_EQ(Binomial(5, 0), 1u);
  EXPECT_EQ(Binomial(3, 4), 0u);
  const std::vector<ProductId> items = {1, 2, 3, 4};
  const auto all = Combinations(items, 2);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front(), Assortment({1, 2}));
  EXPECT_EQ(all.back(), Assortment({3, 4}));
  for (std::uint64_t r = 0; r < 6; ++r) {
    EXPECT_EQ(UnrankCombination(items, 2, r), all[r]);
  }
}

TEST(BruteForceTest, Examples) {
  const Instance one({{1, 1.0, 10.0}});
  const ExactSolution s1 = BruteForceOpt(*MakeExactOracle(one), one.ids(), 1);
  EXPECT_EQ(s1.assortment, Assortment({1}));
  EXPECT_DOUBLE_EQ(s1.revenue, 5.0);

  const Instance three = Three();
  const ExactSolution s = BruteForceOpt(*MakeExactOracle(three), three.ids(), 2);
  EXPECT_EQ(s.assortment, Assortment({1, 3}));
  EXPECT_DOUBLE_EQ(s.revenue, 6.4);
  // {}, three singletons, three pairs.
  EXPECT_EQ(s.assortments_evaluated, 7u);

  const ExactSolution s0 = BruteForceOpt(*MakeExactOracle(three), three.ids(), 0);
  EXPECT_TRUE(s0.assortment.empty());
  EXPECT_EQ(s0.revenue, 0.0);
}

TEST(BruteForceTest, EnumerationCapFailsLoudly) {
  std::mt19937_64 rng(1);
  const Instance instance = FromItems(oracle::RandomItems(rng, 12));
  EXPECT_EQ(EnumerationSize(12, 2), 1u + 12u + 66u);
  try {
    BruteForceOpt(*MakeExactOracle(instance), instance.ids(), 3, 100);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEnumerationCap);
  }
}

TEST(BruteForceTest, MatchesIndependentSearchAndSizeOptimaAreMonotone) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int c = static_cast<int>(rng() % (std::min(4, n) + 1));
    const auto items = oracle::RandomItems(rng, n);
    const Instance instance = FromItems(items);
    const ExactSolution s = BruteForceOpt(*MakeExactOracle(instance), instance.ids(), c);
    const oracle::Best best = oracle::BruteForce(items, c);
    EXPECT_EQ(s.revenue, best.revenue);
    EXPECT_EQ(s.assortment, Assortment(oracle::MaskIds(best.mask)));
    ASSERT_EQ(s.per_size_optima.size(), static_cast<std::size_t>(c + 1));
    for (int k = 0; k <= c; ++k) {
      EXPECT_EQ(s.per_size_optima[k].revenue, oracle::BruteForce(items, k).revenue);
      EXPECT_LE(s.per_size_optima[k].assortment.size(), k);
      if (k > 0) {
        EXPECT_GE(s.per_size_optima[k].revenue, s.per_size_optima[k - 1].revenue);
      }
    }
  }
}

TEST(BruteForceTest, ParallelMatchesSerial) {
  std::mt19937_64 rng(3);
  const int saved = ThreadCount();
  SetThreadCount(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const Instance instance = FromItems(oracle::RandomItems(rng, n));
    const int c = 1 + static_cast<int>(rng() % 4);
    const OraclePtr oracle = MakeExactOracle(instance);
    EXPECT_EQ(BruteForceOpt(*oracle, instance.ids(), c),
              BruteForceOptSerial(*oracle, instance.ids(), c));
  }
  SetThreadCount(saved);
}

TEST(BruteForceTest, TiesGoToLexicographicallySmallest) {
  const Instance instance({{1, 1.0, 5.0}, {2, 1.0, 5.0}, {3, 1.0, 5.0}});
  const ExactSolution s = BruteForceOpt(*MakeExactOracle(instance), instance.ids(), 2);
  EXPECT_EQ(s.assortment, Assortment({1, 2}));
}

TEST(CandidateSetTest, Examples) {
  const Instance one({{1, 2.0, 3.0}});
  EXPECT_EQ(CandidateSetOpt(one, 1).solution.assortment, Assortment({1}));
  const CandidateSetResult three = CandidateSetOpt(Three(), 2);
  EXPECT_EQ(three.solution.assortment, Assortment({1, 3}));
  EXPECT_DOUBLE_EQ(three.solution.revenue, 6.4);
  const Instance same({{1, 1.0, 4.0}, {2, 1.0, 4.0}, {3, 1.0, 4.0}, {4, 1.0, 4.0}});
  EXPECT_EQ(CandidateSetOpt(same, 2).solution.assortment, Assortment({1, 2}));
}

TEST(CandidateSetTest, AgreesWithBruteForceAndCollectionIsSmall) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int c = 1 + static_cast<int>(rng() % std::min(4, n));
    const auto items = oracle::RandomItems(rng, n);
    const CandidateSetResult r = CandidateSetOpt(FromItems(items), c);
    EXPECT_LE(oracle::RelativeDiff(r.solution.revenue, oracle::BruteForce(items, c).revenue),
              1e-9);
    EXPECT_LE(r.candidates.size(), static_cast<std::size_t>(n * c + 1));
    for (const Assortment& m : r.candidates) EXPECT_LE(m.size(), c);
  }
}

TEST(NestingWitnessTest, DegenerateInputsFindNothing) {
  EXPECT_FALSE(FindNestingWitness(1, 6, 3, 0).has_value());
  EXPECT_FALSE(FindNestingWitness(1, 1, 1, 100).has_value());
}

TEST(NestingWitnessTest, VerificationRejectsNestedOptima) {
  NestingWitness w;
  w.instance = Three();
  w.smaller_capacity = 1;
  w.larger_capacity = 2;
  // Optimum of size <= 1 is {1}, contained in {1,3}.
  w.smaller_optimum = Assortment({1});
  w.larger_optimum = Assortment({1, 3});
  EXPECT_FALSE(VerifyNestingWitness(w));
}

TEST(NestingWitnessTest, GoldenFixture) {
  const std::string committed = ReadTextFile(
      std::filesystem::path(ASSORT_FIXTURE_DIR) / fixtures::kWitnessFile);
  const NestingWitness fresh = fixtures::FindWitness();
  EXPECT_TRUE(VerifyNestingWitness(fresh));
  EXPECT_FALSE(fresh.smaller_optimum.is_subset_of(fresh.larger_optimum));
  EXPECT_LT(fresh.attempt, fixtures::kWitnessAttempts);
  EXPECT_EQ(fixtures::WitnessDocument(fresh), committed);

  const NestingWitness parsed = fixtures::ParseWitness(committed);
  EXPECT_TRUE(VerifyNestingWitness(parsed));
  const auto items = [&] {
    std::vector<oracle::Item> out;
    for (const Product& p : parsed.instance.products()) out.push_back({p.weight, p.price});
    return out;
  }();
  EXPECT_EQ(Assortment(oracle::MaskIds(
                oracle::BruteForce(items, parsed.smaller_capacity).mask)),
            parsed.smaller_optimum);
  EXPECT_EQ(Assortment(oracle::MaskIds(
                oracle::BruteForce(items, parsed.larger_capacity).mask)),
            parsed.larger_optimum);
}

TEST(NestingWitnessTest, ThreadCountDoesNotChangeResult) {
  const int saved = ThreadCount();
  SetThreadCount(1);
  const auto serial = FindNestingWitness(123, 6, 3, 300);
  SetThreadCount(4);
  const auto parallel = FindNestingWitness(123, 6, 3, 300);
  SetThreadCount(saved);
  ASSERT_EQ(serial.has_value(), parallel.has_value());
  if (serial) {
    EXPECT_EQ(serial->attempt, parallel->attempt);
    EXPECT_EQ(serial->instance, parallel->instance);
  }
}

}  // namespace
}  // namespace assortment
