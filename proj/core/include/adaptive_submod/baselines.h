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

#ifndef ADAPTIVE_SUBMOD_BASELINES_H_
#define ADAPTIVE_SUBMOD_BASELINES_H_

#include <cstdint>

#include "adaptive_submod/oracle.h"
#include "adaptive_submod/types.h"

namespace adaptive_submod {

struct BaselineResult {
  SubsetSelection solution;
  double value = 0.0;
};

// k sequential argmax steps over f(S u {x}); ties go to the lowest id.
// Step i costs n - i queries and one round. k = 0 costs one query.
BaselineResult greedy(const OracleHandle& oracle, std::size_t k);

// Same output as greedy, re-validating stale marginals from a priority queue.
BaselineResult lazy_greedy(const OracleHandle& oracle, std::size_t k);

struct BruteForceResult {
  SubsetSelection best_set;
  double best_value = 0.0;
};

inline constexpr std::uint64_t kBruteForceLimit = 1000000;

// Number of subsets of size at most k, saturated at limit + 1.
std::uint64_t count_subsets_up_to(std::size_t n, std::size_t k,
                                  std::uint64_t limit = kBruteForceLimit);

// Exact max over |S| <= k; lexicographically least maximizer. Throws
// TooLargeError when more than kBruteForceLimit subsets would be enumerated.
BruteForceResult brute_force_max(const OracleHandle& oracle, std::size_t k);

// Minimum-cardinality S with f(S) >= target, lexicographically least among
// those. Throws TooLargeError when 2^n > kBruteForceLimit and
// InfeasibleTargetError when no subset reaches the target.
BruteForceResult brute_force_cover(const OracleHandle& oracle, double target);

}  // namespace adaptive_submod

#endif  // ADAPTIVE_SUBMOD_BASELINES_H_
