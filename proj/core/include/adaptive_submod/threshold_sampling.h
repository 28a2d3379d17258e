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

#ifndef ADAPTIVE_SUBMOD_THRESHOLD_SAMPLING_H_
#define ADAPTIVE_SUBMOD_THRESHOLD_SAMPLING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "adaptive_submod/oracle.h"
#include "adaptive_submod/random.h"
#include "adaptive_submod/types.h"

namespace adaptive_submod {

struct ThresholdConfig {
  std::size_t k = 1;
  double tau = 1.0;
  double eps = 0.1;
  double delta = 0.1;

  // Throws InvalidInputError unless k >= 1, tau > 0, eps in (0, 1] and delta
  // in (0, 1).
  void validate() const;
};

// Quantities derived from a config for a ground set of size n.
struct ThresholdSchedule {
  double eps_hat = 0.0;          // eps / 3
  std::size_t rounds = 0;        // ceil(log_{1/(1 - eps_hat)}(2n / delta))
  std::size_t scan_steps = 0;    // ceil(ln(k) / eps_hat), the scan runs i = 0..scan_steps
  double delta_hat = 0.0;        // delta / (2 rounds (scan_steps + 1))
  std::uint64_t samples = 0;     // reduced-mean samples per scanned t

  // Distinct values of min(floor((1 + eps_hat)^i), pool) for i = 0..scan_steps.
  std::vector<std::size_t> scan_sizes(std::size_t pool) const;
};

// `log_arg` is k for maximization and n for cover.
ThresholdSchedule make_schedule(std::size_t n, std::size_t log_arg, double eps, double delta);

// Per-round record, used by tests and diagnostics.
struct ThresholdRound {
  std::size_t candidates = 0;   // |A| after filtering
  std::size_t chosen_t = 0;     // t selected by the scan
  std::size_t block = 0;        // |T| merged
  std::size_t block_cap = 0;    // k - |S| or the cover cap
  double value_before = 0.0;    // f(S) before the merge
};

struct ThresholdOutcome {
  SubsetSelection solution;
  double value = 0.0;           // f(solution) in the oracle's frame
  bool exhausted = false;       // loop ended with an empty candidate pool
  std::size_t rounds_used = 0;  // outer iterations executed
  std::vector<ThresholdRound> trace;
};

// Builds S with |S| <= k by batch-adding uniformly random blocks of the
// candidates whose marginal clears tau. Each outer iteration is one filter
// round (plus f(S), when stale) and one round holding every Reduced-Mean
// estimate of the scan; a final round refreshes f(S) if the last merge
// left it stale. `initial_value` is f(empty) when the caller already knows
// it (e.g. 0 on a shifted oracle).
ThresholdOutcome threshold_sampling(const OracleHandle& oracle, const ThresholdConfig& cfg,
                                    RandomSource rng,
                                    std::optional<double> initial_value = std::nullopt);

// {x in candidates : f(S u {x}) - f(S) >= tau} with f(S) cached.
// One round of |candidates \ S| queries; members of S are dropped for free.
SubsetSelection round_filter(const OracleHandle& oracle, const SubsetSelection& solution,
                             double solution_value, const SubsetSelection& candidates,
                             double tau);
// Same, with f(S) issued inside the filter round (one extra query).
SubsetSelection round_filter(const OracleHandle& oracle, const SubsetSelection& solution,
                             const SubsetSelection& candidates, double tau);

struct CoverConfig {
  double target = 1.0;  // L
  double tau = 1.0;
  double eps = 0.5;
  double delta = 0.1;

  // Throws InvalidInputError unless L > 0, tau > 0, eps in (0, 1] and delta
  // in (0, 1).
  void validate() const;
};

struct CoverOutcome {
  SubsetSelection solution;
  double value = 0.0;
  bool reached = false;         // value >= target
  std::size_t rounds_used = 0;
  std::vector<ThresholdRound> trace;
};

// Cover variant: no cardinality budget, blocks capped at
// floor((L - f(S)) / ((1 - eps_hat) tau)), and a stop as soon as f(S) >= L.
CoverOutcome threshold_sampling_for_cover(const OracleHandle& oracle, const CoverConfig& cfg,
                                          RandomSource rng,
                                          std::optional<double> initial_value = std::nullopt);

}  // namespace adaptive_submod

#endif  // ADAPTIVE_SUBMOD_THRESHOLD_SAMPLING_H_
