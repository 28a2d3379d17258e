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

#include "adaptive_submod/threshold_sampling.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adaptive_submod/errors.h"
#include "adaptive_submod/mean_estimator.h"

namespace adaptive_submod {
namespace {

void check_common(double tau, double eps, double delta) {
  if (!(tau > 0.0)) throw InvalidInputError("threshold tau must be positive");
  if (!(eps > 0.0 && eps <= 1.0)) throw InvalidInputError("eps must lie in (0, 1]");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidInputError("delta must lie in (0, 1)");
}

struct FilterResult {
  std::vector<ElementId> kept;
  double solution_value = 0.0;
};

// One round: f(S u {x}) for every candidate outside S, plus f(S) if unknown.
FilterResult filter_round(const OracleHandle& oracle, std::span<const ElementId> solution,
                          const std::vector<char>& in_solution, std::optional<double> known,
                          std::span<const ElementId> candidates, double tau) {
  std::vector<ElementId> pool;
  pool.reserve(candidates.size());
  for (ElementId x : candidates) {
    if (!in_solution[x]) pool.push_back(x);
  }
  const std::size_t offset = known ? 0 : 1;
  std::vector<double> values(pool.size() + offset);
  oracle.run_round(solution, values.size(), [&](std::size_t i, QueryContext& ctx) {
    values[i] = i < offset ? ctx.extend(std::span<const ElementId>()) : ctx.extend(pool[i - offset]);
    ctx.rewind();
  });
  FilterResult out;
  out.solution_value = known ? *known : values[0];
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (values[i + offset] - out.solution_value >= tau) out.kept.push_back(pool[i]);
  }
  return out;
}

double refresh_value(const OracleHandle& oracle, std::span<const ElementId> solution) {
  double v = 0.0;
  oracle.run_round(solution, 1, [&](std::size_t, QueryContext& ctx) {
    v = ctx.extend(std::span<const ElementId>());
    ctx.rewind();
  });
  return v;
}

struct LoopSpec {
  double tau;
  double eps;
  double delta;
  std::size_t log_arg;
  std::optional<std::size_t> k;   // maximization budget
  std::optional<double> target;   // cover goal
};

struct LoopResult {
  SubsetSelection solution;
  double value = 0.0;
  bool exhausted = false;
  std::size_t rounds_used = 0;
  std::vector<ThresholdRound> trace;
};

LoopResult run_threshold_loop(const OracleHandle& oracle, const LoopSpec& spec, RandomSource rng,
                              std::optional<double> value) {
  const std::size_t n = oracle.ground_size();
  LoopResult out;
  std::vector<char> in_solution(n, 0);
  std::vector<ElementId> solution;
  auto finish = [&]() {
    if (!value) value = refresh_value(oracle, solution);
    out.solution = SubsetSelection(std::move(solution));
    out.value = *value;
    return std::move(out);
  };
  if (n == 0) {
    out.exhausted = true;
    return finish();
  }
  const ThresholdSchedule schedule = make_schedule(n, spec.log_arg, spec.eps, spec.delta);
  std::vector<ElementId> candidates(n);
  for (std::size_t i = 0; i < n; ++i) candidates[i] = static_cast<ElementId>(i);

  for (std::size_t round = 0; round < schedule.rounds; ++round) {
    FilterResult filtered =
        filter_round(oracle, solution, in_solution, value, candidates, spec.tau);
    value = filtered.solution_value;
    candidates = std::move(filtered.kept);
    ++out.rounds_used;
    if (candidates.empty()) {
      out.exhausted = true;
      break;
    }

    std::size_t cap = 0;
    if (spec.k) {
      cap = *spec.k - solution.size();
    } else {
      const double room = (*spec.target - *value) / ((1.0 - schedule.eps_hat) * spec.tau);
      cap = room >= static_cast<double>(candidates.size())
                ? candidates.size()
                : static_cast<std::size_t>(std::floor(std::max(room, 0.0)));
      // A zero cap cannot change S at this threshold; later rounds would
      // only repeat the same filter.
      if (cap == 0) break;
    }

    RandomSource round_rng = rng.split(round);
    const std::vector<std::size_t> sizes = schedule.scan_sizes(candidates.size());
    std::vector<DtSampler> samplers;
    samplers.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      samplers.emplace_back(oracle, solution, candidates, sizes[i], spec.tau,
                            round_rng.split(i + 1));
    }
    const std::vector<EstimatorVerdict> verdicts =
        reduced_mean_batched(samplers, schedule.eps_hat, schedule.delta_hat);
    std::size_t chosen = sizes.back();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (verdicts[i].reduced) {
        chosen = sizes[i];
        break;
      }
    }

    ThresholdRound record;
    record.candidates = candidates.size();
    record.chosen_t = chosen;
    record.block_cap = cap;
    record.value_before = *value;
    record.block = std::min(chosen, cap);

    RandomSource block_rng = round_rng.split(0);
    const SubsetSelection block =
        sample_uniform_subset(block_rng, SubsetSelection(candidates), record.block);
    for (ElementId x : block) {
      in_solution[x] = 1;
      solution.push_back(x);
    }
    value.reset();
    out.trace.push_back(record);

    if (spec.k) {
      if (solution.size() == *spec.k) break;
    } else {
      value = refresh_value(oracle, solution);
      if (*value >= *spec.target) break;
    }
  }
  return finish();
}

}  // namespace

void ThresholdConfig::validate() const {
  if (k < 1) throw InvalidInputError("cardinality budget k must be at least 1");
  check_common(tau, eps, delta);
}

void CoverConfig::validate() const {
  if (!(target > 0.0)) throw InvalidInputError("cover target L must be positive");
  check_common(tau, eps, delta);
}

ThresholdSchedule make_schedule(std::size_t n, std::size_t log_arg, double eps, double delta) {
  ThresholdSchedule s;
  s.eps_hat = eps / 3.0;
  const double rounds =
      std::ceil(std::log(2.0 * static_cast<double>(n) / delta) / -std::log1p(-s.eps_hat));
  s.rounds = static_cast<std::size_t>(std::max(rounds, 1.0));
  s.scan_steps = log_arg <= 1 ? 0
                              : static_cast<std::size_t>(std::ceil(
                                    std::log(static_cast<double>(log_arg)) / s.eps_hat));
  s.delta_hat = delta / (2.0 * static_cast<double>(s.rounds) * (s.scan_steps + 1.0));
  s.samples = reduced_mean_sample_count(s.eps_hat, s.delta_hat);
  return s;
}

std::vector<std::size_t> ThresholdSchedule::scan_sizes(std::size_t pool) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= scan_steps; ++i) {
    const double grown = std::floor(std::pow(1.0 + eps_hat, static_cast<double>(i)));
    const std::size_t t = grown >= static_cast<double>(pool) ? pool : static_cast<std::size_t>(grown);
    if (out.empty() || out.back() != t) out.push_back(t);
    if (t == pool) break;
  }
  return out;
}

ThresholdOutcome threshold_sampling(const OracleHandle& oracle, const ThresholdConfig& cfg,
                                    RandomSource rng, std::optional<double> initial_value) {
  cfg.validate();
  LoopSpec spec{cfg.tau, cfg.eps, cfg.delta, cfg.k, cfg.k, std::nullopt};
  LoopResult r = run_threshold_loop(oracle, spec, rng, initial_value);
  ThresholdOutcome out;
  out.solution = std::move(r.solution);
  out.value = r.value;
  out.exhausted = r.exhausted;
  out.rounds_used = r.rounds_used;
  out.trace = std::move(r.trace);
  return out;
}

CoverOutcome threshold_sampling_for_cover(const OracleHandle& oracle, const CoverConfig& cfg,
                                          RandomSource rng, std::optional<double> initial_value) {
  cfg.validate();
  LoopSpec spec{cfg.tau, cfg.eps, cfg.delta, oracle.ground_size(), std::nullopt, cfg.target};
  LoopResult r = run_threshold_loop(oracle, spec, rng, initial_value);
  CoverOutcome out;
  out.solution = std::move(r.solution);
  out.value = r.value;
  out.reached = r.value >= cfg.target;
  out.rounds_used = r.rounds_used;
  out.trace = std::move(r.trace);
  return out;
}

SubsetSelection round_filter(const OracleHandle& oracle, const SubsetSelection& solution,
                             double solution_value, const SubsetSelection& candidates,
                             double tau) {
  solution.validate(oracle.ground_size());
  candidates.validate(oracle.ground_size());
  std::vector<char> in_solution(oracle.ground_size(), 0);
  for (ElementId x : solution) in_solution[x] = 1;
  return SubsetSelection(filter_round(oracle, solution.members(), in_solution, solution_value,
                                      candidates.members(), tau)
                             .kept);
}

SubsetSelection round_filter(const OracleHandle& oracle, const SubsetSelection& solution,
                             const SubsetSelection& candidates, double tau) {
  solution.validate(oracle.ground_size());
  candidates.validate(oracle.ground_size());
  std::vector<char> in_solution(oracle.ground_size(), 0);
  for (ElementId x : solution) in_solution[x] = 1;
  return SubsetSelection(filter_round(oracle, solution.members(), in_solution, std::nullopt,
                                      candidates.members(), tau)
                             .kept);
}

}  // namespace adaptive_submod
