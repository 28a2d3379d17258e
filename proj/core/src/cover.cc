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

#include "adaptive_submod/cover.h"

#include <algorithm>
#include <cmath>

#include "adaptive_submod/errors.h"
#include "adaptive_submod/maximizers.h"

namespace adaptive_submod {
namespace {

constexpr double kCoverEps = 0.5;

}  // namespace

CoverResult adaptive_greedy_cover(const OracleHandle& oracle, double target, RandomSource rng) {
  if (!(target > 0.0)) throw InvalidInputError("cover target L must be positive");
  const std::size_t n = oracle.ground_size();
  if (n == 0) throw InfeasibleTargetError("cover target exceeds f(N)");
  const double full = oracle.evaluate(SubsetSelection::Range(n));
  if (target > full) throw InfeasibleTargetError("cover target exceeds f(N)");

  const SingletonMax top = max_singleton(oracle);
  CoverResult out;
  out.delta_star = top.delta_star;
  std::vector<ElementId> solution;
  double value = top.empty_value;
  if (value >= target) {
    out.value = value;
    return out;
  }

  const std::size_t m = top.delta_star > 1.0
                            ? static_cast<std::size_t>(std::ceil(std::log(top.delta_star) / kCoverEps))
                            : 0;
  const double delta =
      std::min(0.5, 1.0 / (static_cast<double>(n) * (static_cast<double>(m) + 1.0)));

  auto run_rung = [&](double tau, bool cleanup, std::uint64_t stream) {
    CoverRung rung;
    rung.tau = tau;
    rung.target = target - value;
    rung.cleanup = cleanup;
    const SubsetSelection base(solution);
    rung.outcome = threshold_sampling_for_cover(oracle.shifted(base, value),
                                                CoverConfig{rung.target, tau, kCoverEps, delta},
                                                rng.split(stream), 0.0);
    solution.insert(solution.end(), rung.outcome.solution.begin(), rung.outcome.solution.end());
    value += rung.outcome.value;
    rung.value_after = value;
    out.rungs.push_back(std::move(rung));
  };

  double tau = top.delta_star;
  for (std::size_t i = 0; i <= m && value < target; ++i, tau *= 1.0 - kCoverEps) {
    run_rung(tau, false, i);
  }
  // A cleanup rung that adds nothing means every marginal is below 1, which
  // an integer objective below f(N) cannot produce.
  for (std::uint64_t c = m + 1; value < target; ++c) {
    run_rung(1.0, true, c);
    if (out.rungs.back().outcome.solution.empty()) break;
  }
  out.solution = SubsetSelection(std::move(solution));
  out.value = value;
  return out;
}

}  // namespace adaptive_submod
