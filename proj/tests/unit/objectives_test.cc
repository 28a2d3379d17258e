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

#include "adaptive_submod/objectives.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "adaptive_submod/errors.h"
#include "fixtures.h"

namespace adaptive_submod {
namespace {

using testing::MakeCoverage;

TEST(CoverageTest, UnitValues) {
  const CoverageInstance inst = MakeCoverage(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(coverage_value(inst, {0, 1}), 3.0);
  EXPECT_EQ(coverage_value(inst, {}), 0.0);
}

TEST(CoverageTest, WeightedValues) {
  CoverageInstance inst = MakeCoverage(3, {{0, 1}, {1, 2}});
  inst.weights = {2, 1, 5};
  EXPECT_EQ(coverage_value(inst, {1}), 6.0);
  EXPECT_EQ(CoverageFunction(inst).value(std::vector<ElementId>{0, 1}), 8.0);
}

TEST(CoverageTest, ValidateRejectsBadPointsAndWeights) {
  CoverageInstance inst = MakeCoverage(3, {{0, 1}});
  inst.sets.push_back({3});
  EXPECT_THROW(inst.validate(), InvalidInputError);
  inst.sets.pop_back();
  inst.weights[0] = -1.0;
  EXPECT_THROW(inst.validate(), InvalidInputError);
}

TEST(FacilityTest, Values) {
  FacilityInstance inst{{{1, 0}, {0, 1}}};
  EXPECT_EQ(facility_value(inst, {0}), 1.0);
  EXPECT_EQ(facility_value(inst, {0, 1}), 2.0);
  EXPECT_EQ(facility_value(inst, {}), 0.0);

  FacilityInstance three{{{0.5, 0.2, 0.9}, {0.1, 0.8, 0.3}, {0.7, 0.1, 0.0}}};
  EXPECT_DOUBLE_EQ(facility_value(three, SubsetSelection::Range(3)), 0.7 + 0.8 + 0.9);
}

TEST(FacilityTest, ValidateRejectsRaggedRows) {
  FacilityInstance inst{{{1, 0}, {0}}};
  EXPECT_THROW(inst.validate(), InvalidInputError);
}

TEST(AdditiveTest, ClosedForm) {
  const AdditiveInstance inst = testing::MakeAdditive({5, 1, 3, 7});
  RandomSource rng(1);
  for (int i = 0; i < 50; ++i) {
    const SubsetSelection s = testing::RandomSubset(rng, 4, 0.5);
    double sum = 0.0;
    for (ElementId x : s) sum += inst.weights[x];
    EXPECT_EQ(additive_value(inst, s), sum);
  }
}

TEST(GeneratorTest, CoverageEdgeCases) {
  RandomSource rng(1);
  const CoverageInstance empty_sets = gen_coverage(rng, 5, 10, 0, false);
  for (const auto& s : empty_sets.sets) EXPECT_TRUE(s.empty());
  EXPECT_EQ(coverage_value(empty_sets, SubsetSelection::Range(5)), 0.0);

  const CoverageInstance one = gen_coverage(rng, 1, 10, 4, true);
  double w = 0.0;
  for (std::uint32_t p : one.sets[0]) w += one.weights[p];
  EXPECT_EQ(coverage_value(one, {0}), w);

  EXPECT_THROW(gen_coverage(rng, 0, 10, 3, false), InvalidInputError);
  EXPECT_THROW(gen_coverage(rng, 3, 0, 3, false), InvalidInputError);
}

TEST(GeneratorTest, Reproducible) {
  RandomSource a(77);
  RandomSource b(77);
  EXPECT_EQ(gen_coverage(a, 30, 50, 6, true), gen_coverage(b, 30, 50, 6, true));
  EXPECT_EQ(gen_facility(a, 10, 8), gen_facility(b, 10, 8));
  EXPECT_EQ(gen_additive(a, 10, 9), gen_additive(b, 10, 9));
}

TEST(GeneratorTest, AdditiveWeightsInRange) {
  RandomSource rng(5);
  const AdditiveInstance inst = gen_additive(rng, 200, 4);
  for (double w : inst.weights) {
    EXPECT_GE(w, 1.0);
    EXPECT_LE(w, 4.0);
    EXPECT_EQ(w, std::floor(w));
  }
}

// Accumulators must agree with value() under every sequence of extends.
void CheckAccumulatorAgrees(const SetFunction& f, std::uint64_t seed) {
  RandomSource rng(seed);
  const std::size_t n = f.ground_size();
  auto acc = f.make_accumulator();
  for (int trial = 0; trial < 100; ++trial) {
    const SubsetSelection base = testing::RandomSubset(rng, n, 0.2);
    acc->reset(base.members());
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<ElementId> current(base.begin(), base.end());
      for (int step = 0; step < 3; ++step) {
        const SubsetSelection extra = testing::RandomSubset(rng, n, 0.15);
        const double got = acc->extend(extra.members());
        for (ElementId x : extra) {
          if (std::find(current.begin(), current.end(), x) == current.end()) current.push_back(x);
        }
        ASSERT_NEAR(got, f.value(current), 1e-9);
      }
      acc->rewind();
      ASSERT_NEAR(acc->extend({}), f.value(base.members()), 1e-9);
      acc->rewind();
    }
  }
}

TEST(AccumulatorTest, MaskCoverage) {
  CheckAccumulatorAgrees(CoverageFunction(testing::RandomCoverage(1, 30, 60, 6)), 1);
}

TEST(AccumulatorTest, CountingCoverage) {
  CheckAccumulatorAgrees(CoverageFunction(testing::RandomCoverage(2, 30, 500, 20)), 2);
  RandomSource rng(3);
  CheckAccumulatorAgrees(CoverageFunction(gen_coverage(rng, 30, 50, 8, true)), 3);
}

TEST(AccumulatorTest, Facility) {
  RandomSource rng(4);
  CheckAccumulatorAgrees(FacilityFunction(gen_facility(rng, 25, 12)), 4);
}

TEST(AccumulatorTest, Additive) {
  RandomSource rng(5);
  CheckAccumulatorAgrees(AdditiveFunction(gen_additive(rng, 25, 10)), 5);
}

// Diminishing returns and monotonicity on random S subset T, x outside T.
void CheckSubmodular(const SetFunction& f, std::uint64_t seed) {
  RandomSource rng(seed);
  const std::size_t n = f.ground_size();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ElementId> s;
    std::vector<ElementId> t;
    ElementId x = static_cast<ElementId>(rng.uniform_below(n));
    for (std::size_t e = 0; e < n; ++e) {
      if (e == x) continue;
      const double u = rng.uniform01();
      if (u < 0.2) s.push_back(static_cast<ElementId>(e));
      if (u < 0.5) t.push_back(static_cast<ElementId>(e));
    }
    const double fs = f.value(s);
    const double ft = f.value(t);
    s.push_back(x);
    t.push_back(x);
    const double gain_s = f.value(s) - fs;
    const double gain_t = f.value(t) - ft;
    ASSERT_LE(fs, ft + 1e-12);
    ASSERT_GE(gain_s, gain_t - 1e-12);
    ASSERT_GE(gain_t, -1e-12);
  }
}

TEST(PropertyTest, GeneratedInstancesAreMonotoneSubmodular) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RandomSource rng(seed);
    CheckSubmodular(CoverageFunction(gen_coverage(rng, 40, 80, 7, false)), seed);
    CheckSubmodular(CoverageFunction(gen_coverage(rng, 40, 80, 7, true)), seed);
    CheckSubmodular(FacilityFunction(gen_facility(rng, 40, 10)), seed);
    CheckSubmodular(AdditiveFunction(gen_additive(rng, 40, 5)), seed);
  }
}

TEST(MakeFunctionTest, DispatchesOnKind) {
  const Instance inst = testing::MakeAdditive({2, 3});
  auto f = make_function(inst);
  EXPECT_EQ(f->ground_size(), 2u);
  EXPECT_EQ(f->value(std::vector<ElementId>{0, 1}), 5.0);
  EXPECT_EQ(instance_size(inst), 2u);
}

}  // namespace
}  // namespace adaptive_submod
