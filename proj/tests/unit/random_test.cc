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

#include "adaptive_submod/random.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "adaptive_submod/errors.h"

namespace adaptive_submod {
namespace {

TEST(RandomSourceTest, SameSeedSameStream) {
  RandomSource a(42, 3);
  RandomSource b(42, 3);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(RandomSourceTest, StreamsAndSplitsDiffer) {
  RandomSource base(7);
  RandomSource other(7, 1);
  RandomSource c0 = base.split(0);
  RandomSource c1 = base.split(1);
  EXPECT_NE(base(), other());
  EXPECT_NE(c0(), c1());
  EXPECT_EQ(base.split(5)(), base.split(5)());
}

TEST(RandomSourceTest, SplitIgnoresParentConsumption) {
  RandomSource a(9);
  RandomSource b(9);
  for (int i = 0; i < 10; ++i) b();
  EXPECT_EQ(a.split(2)(), b.split(2)());
}

TEST(RandomSourceTest, UniformBelowStaysInRangeAndCoversIt) {
  RandomSource rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.uniform_below(7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int h : hits) EXPECT_NEAR(h, 1000, 150);
}

TEST(RandomSourceTest, Uniform01InUnitInterval) {
  RandomSource rng(2);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 10000, 0.5, 0.02);
}

TEST(SampleUniformSubsetTest, EdgeSizes) {
  RandomSource rng(3);
  const SubsetSelection pool{5, 8, 13};
  EXPECT_TRUE(sample_uniform_subset(rng, pool, 0).empty());
  EXPECT_TRUE(sample_uniform_subset(rng, pool, 3).same_set(pool));
  EXPECT_THROW(sample_uniform_subset(rng, pool, 4), InvalidInputError);
}

TEST(SampleUniformSubsetTest, PairsOfThreeAreUniform) {
  const SubsetSelection pool{0, 1, 2};
  std::map<std::vector<ElementId>, int> counts;
  constexpr int kDraws = 30000;
  for (int seed = 0; seed < kDraws; ++seed) {
    RandomSource rng(seed);
    ++counts[sample_uniform_subset(rng, pool, 2).sorted()];
  }
  ASSERT_EQ(counts.size(), 3u);
  for (const auto& [pair, c] : counts) {
    EXPECT_NEAR(static_cast<double>(c) / kDraws, 1.0 / 3.0, 0.02);
  }
}

TEST(SampleUniformSubsetTest, InclusionFrequencyIsExchangeable) {
  constexpr std::size_t kPool = 10;
  constexpr std::size_t kT = 3;
  constexpr int kDraws = 20000;
  const SubsetSelection pool = SubsetSelection::Range(kPool);
  std::vector<int> hits(kPool, 0);
  RandomSource root(11);
  for (int i = 0; i < kDraws; ++i) {
    RandomSource rng = root.split(i);
    for (ElementId x : sample_uniform_subset(rng, pool, kT)) ++hits[x];
  }
  const double p = static_cast<double>(kT) / kPool;
  for (int h : hits) {
    EXPECT_NEAR(static_cast<double>(h) / kDraws, p, 3.0 * std::sqrt(p / kDraws));
  }
}

TEST(SampleUniformSubsetTest, MembersAreDistinctAndFromPool) {
  RandomSource rng(4);
  const SubsetSelection pool{2, 4, 6, 8, 10, 12};
  for (int i = 0; i < 100; ++i) {
    const SubsetSelection s = sample_uniform_subset(rng, pool, 4);
    std::set<ElementId> seen(s.begin(), s.end());
    EXPECT_EQ(seen.size(), 4u);
    for (ElementId x : s) EXPECT_TRUE(pool.contains(x));
  }
}

TEST(SubsampleBernoulliTest, ExtremeProbabilities) {
  RandomSource rng(5);
  const SubsetSelection pool = SubsetSelection::Range(50);
  EXPECT_TRUE(subsample_bernoulli(rng, pool, 0.0).empty());
  EXPECT_EQ(subsample_bernoulli(rng, pool, 1.0), pool);
  EXPECT_THROW(subsample_bernoulli(rng, pool, -0.1), InvalidInputError);
  EXPECT_THROW(subsample_bernoulli(rng, pool, 1.5), InvalidInputError);
}

TEST(SubsampleBernoulliTest, RetainedCountConcentrates) {
  const SubsetSelection pool = SubsetSelection::Range(1000);
  int inside = 0;
  for (int seed = 0; seed < 1000; ++seed) {
    RandomSource rng(seed);
    const std::size_t kept = subsample_bernoulli(rng, pool, 0.25).size();
    if (kept >= 200 && kept <= 300) ++inside;
  }
  EXPECT_GE(inside, 990);
}

}  // namespace
}  // namespace adaptive_submod
