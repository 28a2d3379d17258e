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

#include "adaptive_submod/baselines.h"

#include <gtest/gtest.h>

#include <cmath>

#include "adaptive_submod/errors.h"
#include "adaptive_submod/maximizers.h"
#include "fixtures.h"

namespace adaptive_submod {
namespace {

using testing::MakeAdditive;
using testing::MakeCoverage;
using testing::OracleOf;

TEST(GreedyTest, AdditiveTopK) {
  OracleHandle o = OracleOf(MakeAdditive({3, 9, 1, 7, 5}));
  const BaselineResult r = greedy(o, 3);
  EXPECT_EQ(r.solution, SubsetSelection({1, 3, 4}));
  EXPECT_EQ(r.value, 21.0);
  EXPECT_EQ(o.counts(), (LedgerCounts{5 + 4 + 3, 3}));
}

TEST(GreedyTest, ZeroBudget) {
  OracleHandle o = OracleOf(MakeAdditive({3, 9}));
  EXPECT_TRUE(greedy(o, 0).solution.empty());
  EXPECT_TRUE(lazy_greedy(o, 0).solution.empty());
  EXPECT_THROW(greedy(o, 3), InvalidInputError);
}

TEST(GreedyTest, TiesGoToLowestId) {
  OracleHandle o = OracleOf(MakeAdditive({2, 5, 5, 2}));
  EXPECT_EQ(greedy(o, 2).solution, SubsetSelection({1, 2}));
  EXPECT_EQ(greedy(o, 3).solution, SubsetSelection({1, 2, 0}));
}

TEST(GreedyTest, ClassicalGuarantee) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CoverageInstance inst = testing::RandomCoverage(800 + seed, 16, 30, 4);
    const double opt = brute_force_max(OracleOf(inst), 4).best_value;
    EXPECT_GE(greedy(OracleOf(inst), 4).value, (1.0 - 1.0 / std::exp(1.0)) * opt);
  }
}

TEST(LazyGreedyTest, MatchesGreedy) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomSource rng(seed);
    const Instance inst = seed % 3 == 0   ? Instance(gen_coverage(rng, 40, 60, 5, false))
                          : seed % 3 == 1 ? Instance(gen_coverage(rng, 40, 60, 5, true))
                                          : Instance(gen_facility(rng, 40, 10));
    OracleHandle a = OracleOf(inst);
    OracleHandle b = OracleOf(inst);
    const BaselineResult x = greedy(a, 8);
    const BaselineResult y = lazy_greedy(b, 8);
    EXPECT_EQ(x.solution, y.solution) << "seed " << seed;
    EXPECT_EQ(x.value, y.value);
    EXPECT_LE(b.counts().total_queries, a.counts().total_queries);
  }
}

TEST(LazyGreedyTest, AdditiveQueryCount) {
  RandomSource rng(3);
  const AdditiveInstance inst = gen_additive(rng, 30, 1000);
  OracleHandle o = OracleOf(inst);
  lazy_greedy(o, 6);
  EXPECT_EQ(o.counts().total_queries, 30u + 5u);
}

TEST(BruteForceMaxTest, Examples) {
  OracleHandle add = OracleOf(MakeAdditive({3, 9, 1, 7}));
  EXPECT_EQ(brute_force_max(add, 2).best_value, 16.0);
  EXPECT_EQ(brute_force_max(add, 4).best_value, 20.0);

  OracleHandle cov = OracleOf(MakeCoverage(3, {{0}, {0, 1}, {2}, {1, 2}}));
  const BruteForceResult r = brute_force_max(cov, 2);
  EXPECT_EQ(r.best_value, 3.0);
  EXPECT_EQ(r.best_set, SubsetSelection({0, 3}));
  EXPECT_EQ(cov.counts(), (LedgerCounts{11, 1}));
}

TEST(BruteForceMaxTest, LexicographicallyLeast) {
  OracleHandle o = OracleOf(MakeAdditive({1, 1, 1, 1}));
  EXPECT_EQ(brute_force_max(o, 2).best_set, SubsetSelection({0, 1}));
  EXPECT_TRUE(brute_force_max(o, 0).best_set.empty());
}

TEST(BruteForceMaxTest, SingletonMatchesMaxSingleton) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CoverageInstance inst = testing::RandomCoverage(seed, 12, 20, 4);
    EXPECT_EQ(brute_force_max(OracleOf(inst), 1).best_value,
              max_singleton(OracleOf(inst)).delta_star);
  }
}

TEST(BruteForceMaxTest, Guard) {
  EXPECT_EQ(count_subsets_up_to(4, 2), 11u);
  EXPECT_EQ(count_subsets_up_to(30, 5), 174437u);
  EXPECT_EQ(count_subsets_up_to(40, 5), 760099u);
  EXPECT_GT(count_subsets_up_to(50, 5), kBruteForceLimit);
  OracleHandle o = OracleOf(MakeAdditive(std::vector<double>(50, 1.0)));
  EXPECT_THROW(brute_force_max(o, 5), TooLargeError);
}

TEST(BruteForceCoverTest, Examples) {
  OracleHandle o = OracleOf(MakeCoverage(3, {{0}, {0, 1}, {2}, {1, 2}}));
  EXPECT_TRUE(brute_force_cover(o, 0.0).best_set.empty());
  const BruteForceResult r = brute_force_cover(o, 3.0);
  EXPECT_EQ(r.best_set, SubsetSelection({0, 3}));
  EXPECT_THROW(brute_force_cover(o, 4.0), InfeasibleTargetError);

  OracleHandle full = OracleOf(MakeCoverage(3, {{0}, {0, 1, 2}, {2}}));
  EXPECT_EQ(brute_force_cover(full, 3.0).best_set, SubsetSelection({1}));
}

TEST(BruteForceCoverTest, Guard) {
  OracleHandle o = OracleOf(MakeAdditive(std::vector<double>(20, 1.0)));
  EXPECT_THROW(brute_force_cover(o, 1.0), TooLargeError);
}

}  // namespace
}  // namespace adaptive_submod
