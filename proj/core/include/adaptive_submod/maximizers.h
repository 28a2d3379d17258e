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

#ifndef ADAPTIVE_SUBMOD_MAXIMIZERS_H_
#define ADAPTIVE_SUBMOD_MAXIMIZERS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "adaptive_submod/oracle.h"
#include "adaptive_submod/random.h"
#include "adaptive_submod/threshold_sampling.h"
#include "adaptive_submod/types.h"

namespace adaptive_submod {

// [lower, upper] bracketing OPT (or OPT / k for per-element intervals).
struct Interval {
  double lower = 1.0;
  double upper = 1.0;

  // Throws InvalidInputError unless 0 < lower <= upper.
  void validate() const;
  double ratio() const { return upper / lower; }
  bool contains(double v, double rel_tol = 0.0) const {
    return v >= lower * (1.0 - rel_tol) && v <= upper * (1.0 + rel_tol);
  }
};

struct SingletonMax {
  ElementId best = 0;
  double delta_star = 0.0;  // max_x f({x})
  double empty_value = 0.0; // f(empty), issued in the same round
};

// One round of n + 1 queries: f(empty) and every singleton. Ties go to the
// lowest id. Throws InvalidInputError on an empty ground set.
SingletonMax max_singleton(const OracleHandle& oracle);

struct ExhaustiveOptions {
  std::size_t k = 1;
  double eps = 0.1;
  double delta = 0.1;
  // Per-element interval for the base threshold; when absent the search
  // covers [delta_star / k, delta_star].
  std::optional<Interval> interval;
};

struct MaximizationResult {
  SubsetSelection solution;
  double value = 0.0;
};

// Runs one greedy ladder per base threshold (branches in parallel, each on a
// forked ledger; rounds merge as the max) and keeps the best branch.
MaximizationResult exhaustive_maximization(const OracleHandle& oracle,
                                           const ExhaustiveOptions& options, RandomSource rng);

// Base thresholds searched by exhaustive_maximization.
std::vector<double> exhaustive_thresholds(std::size_t k, double eps, double delta_star,
                                          const std::optional<Interval>& interval);

enum class DecisionOutcome {
  kUpper,  // OPT <= 2 k tau
  kLower,  // p k tau <= OPT
};

struct DecisionResult {
  DecisionOutcome outcome = DecisionOutcome::kUpper;
  ThresholdOutcome sample;
};

// Threshold-Sampling at (k, tau, eps = 1 - p, delta): kUpper when it returns
// fewer than k elements of total value at most k tau, kLower otherwise.
DecisionResult imprecise_decision(const OracleHandle& oracle, std::size_t k, double tau, double p,
                                  double delta, RandomSource rng,
                                  std::optional<double> empty_value = std::nullopt);

struct BinarySearchStep {
  double tau = 0.0;
  DecisionOutcome outcome = DecisionOutcome::kUpper;
  Interval interval;  // after the update
};

struct BinarySearchTrace {
  Interval initial;
  std::vector<BinarySearchStep> steps;
  double p = 0.0;
  double delta_hat = 0.0;
};

// The search phase alone: shrinks [delta_star, k delta_star] with
// floor(ln ln k / ln 2) imprecise decisions. Requires k >= 8.
BinarySearchTrace binary_search_interval(const OracleHandle& oracle, std::size_t k,
                                         double delta, RandomSource rng);

// Search phase followed by exhaustive_maximization over [L / k, U / k].
// For k < 8 it hands the whole problem to exhaustive_maximization.
MaximizationResult binary_search_maximization(const OracleHandle& oracle, std::size_t k,
                                              double eps, double delta, RandomSource rng,
                                              BinarySearchTrace* trace = nullptr);

struct PreprocessSchedule {
  double ratio = 0.0;      // R = U / L
  double ell = 0.0;        // ln^2 R
  double p = 0.0;          // 1 / ln R
  std::size_t m = 0;       // ceil(log2 R)
  double delta_r = 0.0;    // delta / (2 (m + 1) ln R)
  double r_star = 0.0;     // 2e6 / delta^2
};

PreprocessSchedule make_preprocess_schedule(double ratio, double delta);

enum class IntervalCase { kAllUpper, kAllLower, kMixed };

struct PreprocessIteration {
  PreprocessSchedule schedule;
  Interval before;
  Interval after;           // rule output
  std::size_t subsample_size = 0;
  std::vector<DecisionOutcome> decisions;
  IntervalCase update = IntervalCase::kMixed;
  std::size_t i_star = 0;   // mixed case only
  bool adopted = true;      // false when the rule did not shrink the ratio
};

struct PreprocessTrace {
  double delta_star = 0.0;
  std::vector<PreprocessIteration> iterations;
};

// Three-case interval update applied to a snapshot of (L, U).
struct IntervalUpdate {
  Interval interval;
  IntervalCase update = IntervalCase::kMixed;
  std::size_t i_star = 0;
};
IntervalUpdate update_interval(const Interval& current, double delta_star, double ell, double p,
                               double delta_r, std::span<const DecisionOutcome> decisions);

// Shrinks [delta_star, k delta_star] by Bernoulli(1 / ell) subsampling and
// parallel imprecise decisions until the ratio drops below 2e6 / delta^2.
Interval subsample_preprocessing(const OracleHandle& oracle, std::size_t k, double delta,
                                 RandomSource rng, PreprocessTrace* trace = nullptr);

// Preprocessing at delta = eps / 4, then exhaustive_maximization at
// eps / 4 over the resulting per-element interval.
MaximizationResult subsample_maximization(const OracleHandle& oracle, std::size_t k, double eps,
                                          RandomSource rng, PreprocessTrace* trace = nullptr);

}  // namespace adaptive_submod

#endif  // ADAPTIVE_SUBMOD_MAXIMIZERS_H_
