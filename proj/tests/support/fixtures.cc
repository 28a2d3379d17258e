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

#include "fixtures.h"

#include <algorithm>

namespace adaptive_submod::testing {

CoverageInstance MakeCoverage(std::size_t universe,
                              std::vector<std::vector<std::uint32_t>> sets) {
  CoverageInstance inst;
  inst.universe_size = universe;
  inst.weights.assign(universe, 1.0);
  inst.sets = std::move(sets);
  inst.validate();
  return inst;
}

AdditiveInstance MakeAdditive(std::vector<double> weights) {
  AdditiveInstance inst;
  inst.weights = std::move(weights);
  inst.validate();
  return inst;
}

std::shared_ptr<const SetFunction> FunctionOf(const Instance& inst) { return make_function(inst); }

OracleHandle OracleOf(const Instance& inst, std::size_t threads) {
  OracleOptions options;
  options.threads = threads;
  return OracleHandle(make_function(inst), options);
}

CoverageInstance RandomCoverage(std::uint64_t seed, std::size_t n, std::size_t universe,
                                std::size_t set_size) {
  RandomSource rng(seed);
  return gen_coverage(rng, n, universe, set_size, false);
}

SubsetSelection RandomSubset(RandomSource& rng, std::size_t n, double p) {
  return subsample_bernoulli(rng, SubsetSelection::Range(n), p);
}

double MaxRemainingMarginal(const SetFunction& f, const SubsetSelection& s) {
  const double base = f.value(s.members());
  std::vector<ElementId> grown(s.begin(), s.end());
  grown.push_back(0);
  double best = 0.0;
  for (std::size_t x = 0; x < f.ground_size(); ++x) {
    if (s.contains(static_cast<ElementId>(x))) continue;
    grown.back() = static_cast<ElementId>(x);
    best = std::max(best, f.value(grown) - base);
  }
  return best;
}

}  // namespace adaptive_submod::testing
