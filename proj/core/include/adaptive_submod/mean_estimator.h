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

#ifndef ADAPTIVE_SUBMOD_MEAN_ESTIMATOR_H_
#define ADAPTIVE_SUBMOD_MEAN_ESTIMATOR_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "adaptive_submod/oracle.h"
#include "adaptive_submod/random.h"

namespace adaptive_submod {

struct EstimatorVerdict {
  bool reduced = false;  // the sample mean fell to 1 - 1.5 eps or below
  std::uint64_t samples = 0;
  std::uint64_t ones = 0;
  double mean() const { return samples ? static_cast<double>(ones) / samples : 0.0; }
};

// 16 * ceil(ln(2 / delta) / eps^2). Throws InvalidInputError unless
// eps and delta lie in (0, 1).
std::uint64_t reduced_mean_sample_count(double eps, double delta);

// Bernoulli samples addressed by index; sample i must depend only on i.
using IndicatorSource = std::function<bool(std::uint64_t sample_index)>;

// Draws reduced_mean_sample_count(eps, delta) samples and reports whether
// their mean is at most 1 - 1.5 eps. With probability >= 1 - delta a true
// verdict means mu <= 1 - eps and a false one means mu >= 1 - 2 eps.
EstimatorVerdict reduced_mean(const IndicatorSource& draw, double eps, double delta);

// Sampler for the indicator I_t: with T ~ U(A, t - 1) and x uniform in A \ T,
// I_t = 1[f(S u T u {x}) - f(S u T) >= tau]. Each draw costs two queries.
// The spans must outlive the sampler.
class DtSampler {
 public:
  // Throws InvalidInputError if A is empty or t is not in [1, |A|].
  DtSampler(const OracleHandle& oracle, std::span<const ElementId> solution,
            std::span<const ElementId> candidates, std::size_t t, double tau, RandomSource rng);

  // Draw number `sample_index`, issued as its own singleton round.
  bool draw_indicator(std::uint64_t sample_index) const;
  // Next draw in sequence.
  bool draw_indicator() { return draw_indicator(next_++); }

  const OracleHandle& oracle() const { return *oracle_; }
  std::span<const ElementId> solution() const { return solution_; }
  std::span<const ElementId> candidates() const { return candidates_; }
  std::size_t t() const { return t_; }
  double tau() const { return tau_; }
  const RandomSource& rng() const { return rng_; }

  // Evaluates draw `sample_index` inside a round whose base is the solution.
  bool draw_in(QueryContext& ctx, std::uint64_t sample_index) const;

 private:
  const OracleHandle* oracle_;
  std::span<const ElementId> solution_;
  std::span<const ElementId> candidates_;
  std::size_t t_;
  double tau_;
  RandomSource rng_;
  std::uint64_t next_ = 0;
};

// reduced_mean for every sampler, with all 2 * m * |samplers| queries issued
// as one round. Verdicts equal those of independent reduced_mean calls over
// the same samplers. All samplers must share oracle, solution and candidates.
std::vector<EstimatorVerdict> reduced_mean_batched(std::span<const DtSampler> samplers,
                                                   double eps, double delta);

}  // namespace adaptive_submod

#endif  // ADAPTIVE_SUBMOD_MEAN_ESTIMATOR_H_
