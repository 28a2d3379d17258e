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

#include "bench_cli/suites.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "adaptive_submod/adaptive_submod.h"
#include "bench_cli/report.h"

namespace bench_cli {
namespace as = adaptive_submod;

Check at_most(std::string name, double measured, double threshold) {
  return Check{std::move(name), measured, "<=", threshold, measured <= threshold};
}

Check at_least(std::string name, double measured, double threshold) {
  return Check{std::move(name), measured, ">=", threshold, measured >= threshold};
}

std::string format_check(const Check& c) {
  return c.name + ": " + format_real(c.measured) + " " + c.relation + " " +
         format_real(c.threshold) + (c.pass ? " PASS" : " FAIL");
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

constexpr double kGreedyFactor = 1.0 - 1.0 / std::numbers::e;

double max_remaining_marginal(const as::SetFunction& f, const as::SubsetSelection& s) {
  std::vector<as::ElementId> cur(s.begin(), s.end());
  const double base = f.value(cur);
  double best = -std::numeric_limits<double>::infinity();
  cur.push_back(0);
  for (std::size_t x = 0; x < f.ground_size(); ++x) {
    if (s.contains(static_cast<as::ElementId>(x))) continue;
    cur.back() = static_cast<as::ElementId>(x);
    best = std::max(best, f.value(cur) - base);
  }
  return best;
}

std::vector<double> singleton_values(const as::SetFunction& f) {
  std::vector<double> out(f.ground_size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    const as::ElementId id = static_cast<as::ElementId>(x);
    out[x] = f.value(std::span<const as::ElementId>(&id, 1));
  }
  return out;
}

double top_k_sum(std::vector<double> values, std::size_t k) {
  k = std::min(k, values.size());
  std::partial_sort(values.begin(), values.begin() + k, values.end(), std::greater<>());
  return std::accumulate(values.begin(), values.begin() + k, 0.0);
}

std::uint64_t choose_saturated(std::size_t n, std::size_t r, std::uint64_t limit) {
  r = std::min(r, n - r);
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    c = c * (n - r + i) / i;
    if (c > limit) return limit + 1;
  }
  return c;
}

// Best value over subsets of `pool` of size exactly k (pool larger than k),
// enumerating the removed complement.
double best_of_size(const as::SetFunction& f, const std::vector<as::ElementId>& pool,
                    std::size_t k) {
  const std::size_t p = pool.size();
  const std::size_t r = p - k;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<char> removed(p);
  std::vector<as::ElementId> s;
  s.reserve(k);
  double best = -std::numeric_limits<double>::infinity();
  for (;;) {
    std::fill(removed.begin(), removed.end(), 0);
    for (std::size_t i : idx) removed[i] = 1;
    s.clear();
    for (std::size_t j = 0; j < p; ++j) {
      if (!removed[j]) s.push_back(pool[j]);
    }
    best = std::max(best, f.value(s));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == p - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

struct OptBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Greedy value below; min of the greedy certificate, f(pool) and the top-k
// singleton sum above. Exact when the pool is small enough to enumerate.
OptBounds cardinality_bounds(const std::shared_ptr<const as::SetFunction>& f,
                             const as::SubsetSelection& pool, std::size_t k,
                             const std::vector<double>& singles) {
  if (pool.empty()) return {0.0, 0.0};
  std::vector<as::ElementId> members(pool.begin(), pool.end());
  const double whole = f->value(members);
  if (pool.size() <= k) return {whole, whole};
  if (choose_saturated(pool.size(), pool.size() - k, as::kBruteForceLimit) <=
      as::kBruteForceLimit) {
    const double exact = best_of_size(*f, members, k);
    return {exact, exact};
  }
  as::OracleHandle oracle(f, as::OracleOptions{1, {}, {}});
  const double g = as::greedy(oracle.restricted(pool), k).value;
  std::vector<double> pool_singles;
  for (as::ElementId x : pool) pool_singles.push_back(singles[x]);
  return {g, std::min({g / kGreedyFactor, whole, top_k_sum(pool_singles, k)})};
}

void require(bool ok, const char* what) {
  if (!ok) throw as::InvalidInputError(what);
}

SuiteResult submodularity(const SuiteParams& p) {
  const std::size_t n = p.n.value_or(30);
  const std::size_t trials = p.trials.value_or(1000);
  require(n >= 2, "submodularity: n must be at least 2");
  const as::RandomSource root(p.seed);
  std::size_t dr = 0, mono = 0, nonzero_empty = 0, ledger_mismatch = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    as::RandomSource r = root.split(t);
    as::RandomSource gen = r.split(0);
    as::Instance inst;
    switch (t % 3) {
      case 0: inst = as::gen_coverage(gen, n, 3 * n, 5, t % 2 == 1); break;
      case 1: inst = as::gen_facility(gen, n, 8); break;
      default: inst = as::gen_additive(gen, n, 10); break;
    }
    auto f = as::make_function(inst);
    const auto x = static_cast<as::ElementId>(r.uniform_below(n));
    std::vector<as::ElementId> big, small;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == x || !r.bernoulli(0.5)) continue;
      big.push_back(static_cast<as::ElementId>(i));
      if (r.bernoulli(0.5)) small.push_back(static_cast<as::ElementId>(i));
    }
    const double f_big = f->value(big);
    const double f_small = f->value(small);
    big.push_back(x);
    small.push_back(x);
    const double gain_big = f->value(big) - f_big;
    const double gain_small = f->value(small) - f_small;
    const double tol = 1e-9 * std::max(1.0, std::abs(f_big + gain_big));
    if (gain_big > gain_small + tol) ++dr;
    if (f_big < f_small - tol || gain_big < -tol) ++mono;
    if (f->value({}) != 0.0) ++nonzero_empty;

    as::OracleHandle oracle(f, as::OracleOptions{p.threads, {}, {}});
    big.pop_back();
    small.pop_back();
    const as::SubsetSelection sb(big), ss(small);
    const std::vector<as::SubsetSelection> batch{ss, sb};
    oracle.evaluate_batch(batch);
    oracle.marginal(x, sb);
    if (oracle.counts() != as::LedgerCounts{4, 2}) ++ledger_mismatch;
  }
  SuiteResult out{"submodularity", {}, {}};
  out.checks.push_back(at_most("diminishing-returns violations", dr, 0));
  out.checks.push_back(at_most("monotonicity violations", mono, 0));
  out.checks.push_back(at_most("nonzero f(empty)", nonzero_empty, 0));
  out.checks.push_back(at_most("ledger mismatches", ledger_mismatch, 0));
  out.notes.push_back("trials=" + std::to_string(trials) + " n=" + std::to_string(n) +
                      " kinds=coverage,facility,additive");
  return out;
}

SuiteResult estimator(const SuiteParams& p) {
  const double eps = p.eps.value_or(0.2);
  const double delta = p.delta.value_or(0.1);
  const std::size_t trials = p.trials.value_or(1000);
  require(trials > 0, "estimator: trials must be positive");
  const std::uint64_t m = as::reduced_mean_sample_count(eps, delta);
  const double mu_high = 1.0 - eps / 2.0;
  const double mu_low = std::max(0.0, 1.0 - 3.0 * eps);
  const as::RandomSource root(p.seed);
  std::size_t wrong_high = 0, wrong_low = 0, miscounted = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    for (int side = 0; side < 2; ++side) {
      const double mu = side == 0 ? mu_high : mu_low;
      const as::RandomSource base = root.split(2 * t + side);
      auto draw = [&](std::uint64_t i) {
        as::RandomSource s = base.split(i);
        return s.uniform01() < mu;
      };
      const as::EstimatorVerdict v = as::reduced_mean(draw, eps, delta);
      if (v.samples != m) ++miscounted;
      if (side == 0 && v.reduced) ++wrong_high;
      if (side == 1 && !v.reduced) ++wrong_low;
    }
  }
  SuiteResult out{"estimator", {}, {}};
  const double n = static_cast<double>(trials);
  out.checks.push_back(at_most("wrong-side rate at mu=" + format_real(mu_high),
                               wrong_high / n, delta + 0.03));
  out.checks.push_back(at_most("wrong-side rate at mu=" + format_real(mu_low),
                               wrong_low / n, delta + 0.03));
  out.checks.push_back(at_most("trials with sample count != m", miscounted, 0));
  out.notes.push_back("m=" + std::to_string(m) + " trials=" + std::to_string(trials) +
                      " per side");
  return out;
}

SuiteResult threshold_postconditions(const SuiteParams& p) {
  const std::size_t n = p.n.value_or(30);
  const std::size_t k = p.k.value_or(5);
  const double eps = p.eps.value_or(0.3);
  const double delta = p.delta.value_or(0.05);
  const std::size_t trials = p.trials.value_or(400);
  require(n >= 1 && k >= 1, "threshold-postconditions: n and k must be positive");
  static constexpr double kTauScale[] = {1.0, 0.75, 0.5};
  const as::RandomSource root(p.seed);
  std::size_t overfull = 0, short_runs = 0, short_violations = 0;
  double value_sum = 0.0, tau_size_sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    as::RandomSource r = root.split(t);
    as::RandomSource gen = r.split(0);
    auto f = as::make_function(as::gen_coverage(gen, n, std::max<std::size_t>(4, n / 2), 4, false));
    as::OracleHandle oracle(f, as::OracleOptions{p.threads, {}, {}});
    const double tau = as::max_singleton(oracle).delta_star * kTauScale[t % 3];
    if (tau <= 0.0) continue;
    const as::ThresholdOutcome run =
        as::threshold_sampling(oracle, as::ThresholdConfig{k, tau, eps, delta}, r.split(1));
    const std::size_t size = run.solution.size();
    if (size > k) ++overfull;
    if (size < k) {
      ++short_runs;
      if (max_remaining_marginal(*f, run.solution) >= tau) ++short_violations;
    }
    value_sum += run.value;
    tau_size_sum += tau * static_cast<double>(size);
  }
  SuiteResult out{"threshold-postconditions", {}, {}};
  out.checks.push_back(at_most("runs with |S| > k", overfull, 0));
  out.checks.push_back(at_most(
      "short runs leaving a marginal >= tau (fraction)",
      short_runs ? static_cast<double>(short_violations) / short_runs : 0.0, 0.10));
  out.checks.push_back(at_least("sum f(S) / sum tau |S|",
                                tau_size_sum > 0 ? value_sum / tau_size_sum : 1.0, 1.0 - eps));
  out.notes.push_back("runs=" + std::to_string(trials) +
                      " short_runs=" + std::to_string(short_runs));
  return out;
}

SuiteResult subsample_lemma(const SuiteParams& p) {
  const std::size_t n = p.n.value_or(100);
  const std::size_t k = p.k.value_or(20);
  const double ell = p.ell.value_or(4.0);
  const double delta = p.delta.value_or(0.2);
  const std::size_t trials = p.trials.value_or(500);
  require(n >= 1 && k >= 1 && trials > 0, "subsample-lemma: n, k and trials must be positive");
  require(ell >= 1.0, "subsample-lemma: ell must be at least 1");
  require(delta > 0.0 && delta < 1.0, "subsample-lemma: delta must lie in (0, 1)");
  const as::RandomSource root(p.seed);
  as::RandomSource gen = root.split(0);
  auto f = as::make_function(as::gen_coverage(gen, n, 3 * n, 8, false));
  const std::vector<double> singles = singleton_values(*f);
  const double delta_star = *std::max_element(singles.begin(), singles.end());
  const OptBounds opt = cardinality_bounds(f, as::SubsetSelection::Range(n), k, singles);
  const double scale = 2.0 * ell / delta;

  std::size_t left = 0, right = 0, both = 0, exact = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    as::RandomSource r = root.split(t + 1);
    const as::SubsetSelection sub =
        as::subsample_bernoulli(r, as::SubsetSelection::Range(n), 1.0 / ell);
    const OptBounds sub_opt = cardinality_bounds(f, sub, k, singles);
    if (sub_opt.lower == sub_opt.upper) ++exact;
    const bool l = (delta_star + sub_opt.upper) / 2.0 <= opt.lower;
    const bool u = opt.upper <= scale * (delta_star + sub_opt.lower);
    left += l;
    right += u;
    both += l && u;
  }
  SuiteResult out{"subsample-lemma", {}, {}};
  const double tn = static_cast<double>(trials);
  out.checks.push_back(at_least("two-sided bound holds (fraction)", both / tn, 0.75));
  out.notes.push_back("OPT in [" + format_real(opt.lower) + ", " + format_real(opt.upper) +
                      "] delta_star=" + format_real(delta_star));
  out.notes.push_back("lower side " + format_real(left / tn) + ", upper side " +
                      format_real(right / tn) + ", exact OPT' in " + std::to_string(exact) +
                      "/" + std::to_string(trials) + " trials");
  return out;
}

SuiteResult intervals(const SuiteParams& p) {
  const std::size_t n = p.n.value_or(200);
  const std::size_t k = p.k.value_or(16);
  const double delta = p.delta.value_or(0.1);
  const std::size_t trials = p.trials.value_or(50);
  require(k >= 8, "intervals: k must be at least 8");
  require(n >= 1 && trials > 0, "intervals: n and trials must be positive");
  const double bound = 2.0 * std::numbers::e * std::log(static_cast<double>(k));
  const auto steps = static_cast<std::size_t>(
      std::floor(std::log(std::log(static_cast<double>(k))) / std::log(2.0)));
  const as::RandomSource root(p.seed);
  std::size_t tight = 0, bracketed = 0, wrong_steps = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    as::RandomSource r = root.split(t);
    as::RandomSource gen = r.split(0);
    auto f = as::make_function(as::gen_coverage(gen, n, 3 * n, 8, false));
    as::OracleHandle oracle(f, as::OracleOptions{p.threads, {}, {}});
    const as::BinarySearchTrace trace = as::binary_search_interval(oracle, k, delta, r.split(1));
    const as::Interval last = trace.steps.empty() ? trace.initial : trace.steps.back().interval;
    if (trace.steps.size() != steps) ++wrong_steps;
    if (last.ratio() <= bound * (1.0 + 1e-12)) ++tight;
    const OptBounds opt = cardinality_bounds(f, as::SubsetSelection::Range(n), k,
                                             singleton_values(*f));
    if (last.lower <= opt.upper * (1.0 + 1e-12) && last.upper >= opt.lower * (1.0 - 1e-12)) {
      ++bracketed;
    }
  }
  SuiteResult out{"intervals", {}, {}};
  const double tn = static_cast<double>(trials);
  out.checks.push_back(at_least("final U/L <= 2e ln k (fraction)", tight / tn, 0.90));
  out.checks.push_back(at_least("final interval meets OPT bounds (fraction)", bracketed / tn,
                                1.0 - delta));
  out.checks.push_back(at_most("runs with a step count other than m", wrong_steps, 0));
  out.notes.push_back("m=" + std::to_string(steps) + " 2e ln k=" + format_real(bound));
  return out;
}

SuiteResult cover(const SuiteParams& p) {
  const std::size_t n = p.n.value_or(14);
  const std::size_t trials = p.trials.value_or(100);
  require(n >= 1 && trials > 0, "cover: n and trials must be positive");
  const as::RandomSource root(p.seed);
  std::size_t reached = 0;
  double size_sum = 0.0, opt_sum = 0.0, bound_sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    as::RandomSource r = root.split(t);
    as::RandomSource gen = r.split(0);
    auto f = as::make_function(as::gen_coverage(gen, n, 2 * n, 5, false));
    const double target = f->value(as::SubsetSelection::Range(n).members());
    as::OracleHandle oracle(f, as::OracleOptions{p.threads, {}, {}});
    const as::CoverResult res = as::adaptive_greedy_cover(oracle, target, r.split(1));
    if (res.value >= target) ++reached;
    as::OracleHandle ref(f, as::OracleOptions{p.threads, {}, {}});
    const double star = static_cast<double>(as::brute_force_cover(ref, target).best_set.size());
    size_sum += static_cast<double>(res.solution.size());
    opt_sum += star;
    bound_sum += 8.0 * std::max(1.0, std::log(target)) * star;
  }
  SuiteResult out{"cover", {}, {}};
  const double tn = static_cast<double>(trials);
  out.checks.push_back(at_least("runs reaching f(S) >= L (fraction)", reached / tn, 1.0));
  out.checks.push_back(
      at_most("mean |S| against mean 8 max(1, ln L) |S*|", size_sum / tn, bound_sum / tn));
  out.notes.push_back("mean |S|=" + format_real(size_sum / tn) +
                      " mean |S*|=" + format_real(opt_sum / tn));
  return out;
}

using SuiteFn = SuiteResult (*)(const SuiteParams&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"submodularity", &submodularity},
      {"estimator", &estimator},
      {"threshold-postconditions", &threshold_postconditions},
      {"subsample-lemma", &subsample_lemma},
      {"intervals", &intervals},
      {"cover", &cover},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"submodularity",   "estimator",
                                              "threshold-postconditions", "subsample-lemma",
                                              "intervals",       "cover"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteParams& params) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::out_of_range("unknown suite: " + name);
  return it->second(params);
}

}  // namespace bench_cli
