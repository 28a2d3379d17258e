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

#include "adaptive_submod/maximizers.h"

#include <algorithm>
#include <cmath>

#include "adaptive_submod/errors.h"

namespace adaptive_submod {
namespace {

constexpr std::size_t kMaxPreprocessIterations = 64;

void check_budget(const OracleHandle& oracle, std::size_t k) {
  if (k < 1) throw InvalidInputError("cardinality budget k must be at least 1");
  if (k > oracle.ground_size()) {
    throw InvalidInputError("cardinality budget k exceeds the ground set size");
  }
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw InvalidInputError("eps must lie in (0, 1]");
}

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidInputError("delta must lie in (0, 1)");
}

struct Branch {
  std::vector<ElementId> solution;
  std::optional<double> value;
};

// Descending passes at (1 - eps)^j tau, each on f shifted by the current S.
Branch run_branch(const OracleHandle& oracle, std::size_t k, double tau, double eps,
                  double delta, std::size_t passes, std::optional<double> empty_value,
                  RandomSource rng) {
  Branch b;
  b.value = empty_value;
  double level = tau;
  for (std::size_t j = 0; j < passes && b.solution.size() < k; ++j, level *= 1.0 - eps) {
    if (!(level > 0.0)) break;
    ThresholdConfig cfg{k - b.solution.size(), level, eps, delta};
    ThresholdOutcome t;
    if (b.value) {
      SubsetSelection base(b.solution);
      t = threshold_sampling(oracle.shifted(base, *b.value), cfg, rng.split(j), 0.0);
      b.value = *b.value + t.value;
    } else {
      t = threshold_sampling(oracle, cfg, rng.split(j));
      b.value = t.value;
    }
    b.solution.insert(b.solution.end(), t.solution.begin(), t.solution.end());
  }
  return b;
}

MaximizationResult exhaustive_impl(const OracleHandle& oracle, std::size_t k, double eps,
                                   double delta, const std::vector<double>& thresholds,
                                   std::size_t rungs, std::optional<double> empty_value,
                                   RandomSource rng) {
  const std::size_t passes = static_cast<std::size_t>(std::ceil(std::log(4.0) / eps)) + 1;
  const double delta_hat =
      delta / (static_cast<double>(std::max<std::size_t>(rungs, 1)) * static_cast<double>(passes));

  std::vector<OracleHandle> forks;
  std::vector<Branch> branches;
  forks.reserve(thresholds.size());
  branches.reserve(thresholds.size());
  for (std::size_t b = 0; b < thresholds.size(); ++b) {
    forks.push_back(oracle.fork());
    branches.push_back(
        run_branch(forks.back(), k, thresholds[b], eps, delta_hat, passes, empty_value, rng.split(b)));
  }
  oracle.absorb_parallel(forks);

  std::vector<SubsetSelection> finals;
  finals.reserve(branches.size());
  for (Branch& b : branches) finals.emplace_back(std::move(b.solution));
  const std::vector<double> values = oracle.evaluate_batch(finals);
  std::size_t best = 0;
  for (std::size_t b = 1; b < values.size(); ++b) {
    if (values[b] > values[best]) best = b;
  }
  return {std::move(finals[best]), values[best]};
}

}  // namespace

void Interval::validate() const {
  if (!(lower > 0.0) || !(upper >= lower) || !std::isfinite(upper)) {
    throw InvalidInputError("interval needs 0 < lower <= upper");
  }
}

SingletonMax max_singleton(const OracleHandle& oracle) {
  const std::size_t n = oracle.ground_size();
  if (n == 0) throw InvalidInputError("max_singleton needs a non-empty ground set");
  std::vector<double> values(n + 1);
  oracle.run_round({}, n + 1, [&](std::size_t i, QueryContext& ctx) {
    if (i == 0) {
      values[0] = ctx.extend(std::span<const ElementId>());
    } else {
      values[i] = ctx.extend(static_cast<ElementId>(i - 1));
    }
    ctx.rewind();
  });
  SingletonMax out;
  out.empty_value = values[0];
  out.delta_star = values[1];
  for (std::size_t i = 1; i < n; ++i) {
    if (values[i + 1] > out.delta_star) {
      out.delta_star = values[i + 1];
      out.best = static_cast<ElementId>(i);
    }
  }
  return out;
}

std::vector<double> exhaustive_thresholds(std::size_t k, double eps, double delta_star,
                                          const std::optional<Interval>& interval) {
  std::vector<double> out;
  if (interval) {
    interval->validate();
    const double steps = std::ceil(std::log(interval->ratio()) / std::log1p(eps));
    const std::size_t count = static_cast<std::size_t>(steps) + 1;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(interval->lower * std::pow(1.0 + eps, static_cast<double>(i)));
    }
    return out;
  }
  const std::size_t r =
      static_cast<std::size_t>(std::ceil(2.0 * std::log(static_cast<double>(k)) / eps));
  for (std::size_t i = 0; i <= r; ++i) {
    out.push_back(std::pow(1.0 + eps, static_cast<double>(i)) * delta_star /
                  static_cast<double>(k));
  }
  return out;
}

MaximizationResult exhaustive_maximization(const OracleHandle& oracle,
                                           const ExhaustiveOptions& options, RandomSource rng) {
  check_budget(oracle, options.k);
  check_eps(options.eps);
  check_delta(options.delta);
  if (options.interval) {
    const std::vector<double> thresholds =
        exhaustive_thresholds(options.k, options.eps, 0.0, options.interval);
    return exhaustive_impl(oracle, options.k, options.eps, options.delta, thresholds,
                           thresholds.size(), std::nullopt, rng);
  }
  const SingletonMax top = max_singleton(oracle);
  if (!(top.delta_star > top.empty_value)) {
    return {SubsetSelection(), top.empty_value};
  }
  const std::vector<double> thresholds =
      exhaustive_thresholds(options.k, options.eps, top.delta_star, std::nullopt);
  return exhaustive_impl(oracle, options.k, options.eps, options.delta, thresholds,
                         thresholds.size() - 1, top.empty_value, rng);
}

DecisionResult imprecise_decision(const OracleHandle& oracle, std::size_t k, double tau, double p,
                                  double delta, RandomSource rng,
                                  std::optional<double> empty_value) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidInputError("decision accuracy p must lie in (0, 1)");
  DecisionResult out;
  out.sample = threshold_sampling(oracle, ThresholdConfig{k, tau, 1.0 - p, delta}, rng, empty_value);
  const bool upper = out.sample.solution.size() < k &&
                     out.sample.value <= static_cast<double>(k) * tau;
  out.outcome = upper ? DecisionOutcome::kUpper : DecisionOutcome::kLower;
  return out;
}

BinarySearchTrace binary_search_interval(const OracleHandle& oracle, std::size_t k,
                                         double delta, RandomSource rng) {
  check_budget(oracle, k);
  check_delta(delta);
  if (k < 8) throw InvalidInputError("binary search needs k >= 8");
  const SingletonMax top = max_singleton(oracle);
  if (!(top.delta_star > 0.0)) throw InvalidInputError("max singleton value must be positive");
  const double kd = static_cast<double>(k);
  BinarySearchTrace trace;
  trace.initial = {top.delta_star, kd * top.delta_star};
  trace.p = 1.0 / std::log(kd);
  const auto steps = static_cast<std::size_t>(std::floor(std::log(std::log(kd)) / std::log(2.0)));
  trace.delta_hat = delta / (static_cast<double>(steps) + 1.0);

  Interval current = trace.initial;
  for (std::size_t i = 0; i < steps; ++i) {
    const double tau = std::sqrt(current.lower * current.upper / (2.0 * trace.p)) / kd;
    const DecisionResult d =
        imprecise_decision(oracle, k, tau, trace.p, trace.delta_hat, rng.split(i), top.empty_value);
    if (d.outcome == DecisionOutcome::kUpper) {
      current.upper = 2.0 * kd * tau;
    } else {
      current.lower = trace.p * kd * tau;
    }
    trace.steps.push_back({tau, d.outcome, current});
  }
  return trace;
}

MaximizationResult binary_search_maximization(const OracleHandle& oracle, std::size_t k,
                                              double eps, double delta, RandomSource rng,
                                              BinarySearchTrace* trace) {
  check_budget(oracle, k);
  check_eps(eps);
  check_delta(delta);
  if (k < 8) return exhaustive_maximization(oracle, {k, eps, delta, std::nullopt}, rng);

  BinarySearchTrace local = binary_search_interval(oracle, k, delta, rng.split(0));
  const Interval& last = local.steps.empty() ? local.initial : local.steps.back().interval;
  const double kd = static_cast<double>(k);
  ExhaustiveOptions options{k, eps, local.delta_hat, Interval{last.lower / kd, last.upper / kd}};
  MaximizationResult result = exhaustive_maximization(oracle, options, rng.split(1));
  if (trace) *trace = std::move(local);
  return result;
}

PreprocessSchedule make_preprocess_schedule(double ratio, double delta) {
  PreprocessSchedule s;
  s.ratio = ratio;
  const double log_r = std::log(ratio);
  s.ell = log_r * log_r;
  s.p = 1.0 / log_r;
  s.m = static_cast<std::size_t>(std::ceil(std::log2(ratio)));
  s.delta_r = delta / (2.0 * (static_cast<double>(s.m) + 1.0) * log_r);
  s.r_star = 2e6 / (delta * delta);
  return s;
}

IntervalUpdate update_interval(const Interval& current, double delta_star, double ell, double p,
                               double delta_r, std::span<const DecisionOutcome> decisions) {
  const bool all_upper = std::all_of(decisions.begin(), decisions.end(),
                                     [](DecisionOutcome d) { return d == DecisionOutcome::kUpper; });
  const bool all_lower = std::all_of(decisions.begin(), decisions.end(),
                                     [](DecisionOutcome d) { return d == DecisionOutcome::kLower; });
  IntervalUpdate out;
  if (all_upper) {
    out.update = IntervalCase::kAllUpper;
    out.interval = {(delta_star + current.lower) / 2.0,
                    (4.0 * ell / delta_r) * (delta_star + current.lower)};
    return out;
  }
  if (all_lower) {
    out.update = IntervalCase::kAllLower;
    out.interval = {(p / 2.0) * (delta_star + current.upper),
                    (2.0 * ell / delta_r) * (delta_star + current.upper)};
    return out;
  }
  out.update = IntervalCase::kMixed;
  for (std::size_t i = 0; i + 1 < decisions.size(); ++i) {
    if (decisions[i] == DecisionOutcome::kUpper && decisions[i + 1] == DecisionOutcome::kLower) {
      const double x = std::ldexp(current.lower, static_cast<int>(i) + 1);
      out.i_star = i;
      out.interval = {(p / 2.0) * (delta_star + x), (2.0 * ell / delta_r) * (delta_star + x)};
      return out;
    }
  }
  // Only LOWER...LOWER UPPER...UPPER remains: OPT' lies in [p x / 2, 2 x] with
  // x = 2^j L for the first UPPER index j.
  const auto first_upper = static_cast<std::size_t>(
      std::find(decisions.begin(), decisions.end(), DecisionOutcome::kUpper) - decisions.begin());
  out.i_star = first_upper - 1;
  const double x = std::ldexp(current.lower, static_cast<int>(first_upper));
  out.interval = {(p / 4.0) * (delta_star + x), (4.0 * ell / delta_r) * (delta_star + x)};
  return out;
}

namespace {

Interval preprocess_impl(const OracleHandle& oracle, std::size_t k, double delta,
                         const SingletonMax& top, RandomSource rng, PreprocessTrace* trace) {
  const double kd = static_cast<double>(k);
  const double delta_star = top.delta_star;
  Interval current{delta_star, kd * delta_star};
  if (trace) {
    trace->delta_star = delta_star;
    trace->iterations.clear();
  }
  const double r_star = 2e6 / (delta * delta);
  const SubsetSelection everything = SubsetSelection::Range(oracle.ground_size());

  for (std::size_t iter = 0; iter < kMaxPreprocessIterations && current.ratio() >= r_star; ++iter) {
    PreprocessIteration it;
    it.schedule = make_preprocess_schedule(current.ratio(), delta);
    it.before = current;
    RandomSource iter_rng = rng.split(iter);
    RandomSource sub_rng = iter_rng.split(0);
    const SubsetSelection kept = subsample_bernoulli(sub_rng, everything, 1.0 / it.schedule.ell);
    it.subsample_size = kept.size();
    const OracleHandle restricted = oracle.restricted(kept);

    std::vector<OracleHandle> forks;
    forks.reserve(it.schedule.m + 1);
    for (std::size_t i = 0; i <= it.schedule.m; ++i) {
      forks.push_back(restricted.fork());
      const double tau = std::ldexp(current.lower, static_cast<int>(i)) / kd;
      const DecisionResult d = imprecise_decision(forks.back(), k, tau, it.schedule.p,
                                                  it.schedule.delta_r, iter_rng.split(i + 1));
      it.decisions.push_back(d.outcome);
    }
    restricted.absorb_parallel(forks);

    const IntervalUpdate next = update_interval(current, delta_star, it.schedule.ell, it.schedule.p,
                                                it.schedule.delta_r, it.decisions);
    it.after = next.interval;
    it.update = next.update;
    it.i_star = next.i_star;
    it.adopted = next.interval.ratio() < current.ratio();
    if (trace) trace->iterations.push_back(it);
    if (!it.adopted) break;
    current = next.interval;
  }
  return current;
}

}  // namespace

Interval subsample_preprocessing(const OracleHandle& oracle, std::size_t k, double delta,
                                 RandomSource rng, PreprocessTrace* trace) {
  if (k < 1) throw InvalidInputError("cardinality budget k must be at least 1");
  if (!(delta > 0.0 && delta <= 1.0)) throw InvalidInputError("delta must lie in (0, 1]");
  const SingletonMax top = max_singleton(oracle);
  if (!(top.delta_star > 0.0)) throw InvalidInputError("max singleton value must be positive");
  return preprocess_impl(oracle, k, delta, top, rng, trace);
}

MaximizationResult subsample_maximization(const OracleHandle& oracle, std::size_t k, double eps,
                                          RandomSource rng, PreprocessTrace* trace) {
  check_budget(oracle, k);
  check_eps(eps);
  const double eps_hat = eps / 4.0;
  const SingletonMax top = max_singleton(oracle);
  if (!(top.delta_star > top.empty_value) || !(top.delta_star > 0.0)) {
    return {SubsetSelection(), top.empty_value};
  }
  const Interval opt = preprocess_impl(oracle, k, eps_hat, top, rng.split(0), trace);
  const double kd = static_cast<double>(k);
  ExhaustiveOptions options{k, eps_hat, eps_hat, Interval{opt.lower / kd, opt.upper / kd}};
  return exhaustive_maximization(oracle, options, rng.split(1));
}

}  // namespace adaptive_submod
