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

#ifndef ADAPTIVE_SUBMOD_TESTS_SUPPORT_FIXTURES_H_
#define ADAPTIVE_SUBMOD_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "adaptive_submod/adaptive_submod.h"

namespace adaptive_submod::testing {

// Unit-weight coverage over points 0..universe-1.
CoverageInstance MakeCoverage(std::size_t universe,
                              std::vector<std::vector<std::uint32_t>> sets);

AdditiveInstance MakeAdditive(std::vector<double> weights);

std::shared_ptr<const SetFunction> FunctionOf(const Instance& inst);

OracleHandle OracleOf(const Instance& inst, std::size_t threads = 1);

// Seeded unit coverage with sets of roughly `set_size` points.
CoverageInstance RandomCoverage(std::uint64_t seed, std::size_t n, std::size_t universe,
                                std::size_t set_size);

// Random subset of [0, n) where each id is kept with probability p.
SubsetSelection RandomSubset(RandomSource& rng, std::size_t n, double p);

// Largest marginal over elements outside s.
double MaxRemainingMarginal(const SetFunction& f, const SubsetSelection& s);

}  // namespace adaptive_submod::testing

#endif  // ADAPTIVE_SUBMOD_TESTS_SUPPORT_FIXTURES_H_
