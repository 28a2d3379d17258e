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

#include "adaptive_submod/mean_estimator.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "adaptive_submod/errors.h"

namespace adaptive_submod {
namespace {

void check_unit_open(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw InvalidInputError(std::string(name) + " must lie in (0, 1)");
  }
}

EstimatorVerdict verdict_of(std::uint64_t ones, std::uint64_t samples, double eps) {
  EstimatorVerdict v;
  v.samples = samples;
  v.ones = ones;
  v.reduced = v.mean() <= 1.0 - 1.5 * eps;
  return v;
}

}  // namespace

std::uint64_t reduced_mean_sample_count(double eps, double delta) {
  check_unit_open(eps, "eps");
  check_unit_open(delta, "delta");
  return 16 * static_cast<std::uint64_t>(std::ceil(std::log(2.0 / delta) / (eps * eps)));
}

EstimatorVerdict reduced_mean(const IndicatorSource& draw, double eps, double delta) {
  const std::uint64_t m = reduced_mean_sample_count(eps, delta);
  std::uint64_t ones = 0;
  for (std::uint64_t i = 0; i < m; ++i) ones += draw(i) ? 1 : 0;
  return verdict_of(ones, m, eps);
}

DtSampler::DtSampler(const OracleHandle& oracle, std::span<const ElementId> solution,
                     std::span<const ElementId> candidates, std::size_t t, double tau,
                     RandomSource rng)
    : oracle_(&oracle),
      solution_(solution),
      candidates_(candidates),
      t_(t),
      tau_(tau),
      rng_(rng) {
  if (candidates_.empty()) throw InvalidInputError("D_t sampler needs a nonempty pool");
  if (t_ < 1 || t_ > candidates_.size()) {
    throw InvalidInputError("D_t sampler needs 1 <= t <= |A|, got t = " + std::to_string(t_));
  }
}

bool DtSampler::draw_in(QueryContext& ctx, std::uint64_t sample_index) const {
  std::vector<ElementId>& pool = ctx.scratch;
  if (pool.size() != candidates_.size()) pool.assign(candidates_.begin(), candidates_.end());
  std::vector<std::uint32_t>& swaps = ctx.scratch_index;
  swaps.resize(t_);
  RandomSource rng = rng_.split(sample_index);
  const std::size_t m = pool.size();
  for (std::size_t i = 0; i < t_; ++i) {
    const std::size_t j = i + rng.uniform_below(m - i);
    std::swap(pool[i], pool[j]);
    swaps[i] = static_cast<std::uint32_t>(j);
  }
  const double prefix = ctx.extend(std::span<const ElementId>(pool.data(), t_ - 1));
  const double with_x = ctx.extend(pool[t_ - 1]);
  ctx.rewind();
  for (std::size_t i = t_; i-- > 0;) std::swap(pool[i], pool[swaps[i]]);
  return with_x - prefix >= tau_;
}

bool DtSampler::draw_indicator(std::uint64_t sample_index) const {
  bool bit = false;
  oracle_->run_round(solution_, 1,
                     [&](std::size_t, QueryContext& ctx) { bit = draw_in(ctx, sample_index); });
  return bit;
}

std::vector<EstimatorVerdict> reduced_mean_batched(std::span<const DtSampler> samplers,
                                                   double eps, double delta) {
  if (samplers.empty()) throw InvalidInputError("reduced_mean_batched needs a sampler");
  const std::uint64_t m = reduced_mean_sample_count(eps, delta);
  const DtSampler& first = samplers.front();
  for (const DtSampler& s : samplers) {
    if (&s.oracle() != &first.oracle() || s.solution().data() != first.solution().data() ||
        s.solution().size() != first.solution().size() ||
        s.candidates().data() != first.candidates().data() ||
        s.candidates().size() != first.candidates().size()) {
      throw InvalidInputError("batched samplers must share oracle, solution and candidates");
    }
  }
  std::vector<std::uint8_t> bits(samplers.size() * m, 0);
  first.oracle().run_round(first.solution(), bits.size(), [&](std::size_t i, QueryContext& ctx) {
    bits[i] = samplers[i / m].draw_in(ctx, i % m) ? 1 : 0;
  });
  std::vector<EstimatorVerdict> out;
  out.reserve(samplers.size());
  for (std::size_t s = 0; s < samplers.size(); ++s) {
    const auto begin = bits.begin() + static_cast<std::ptrdiff_t>(s * m);
    const auto ones = static_cast<std::uint64_t>(std::count(begin, begin + m, 1));
    out.push_back(verdict_of(ones, m, eps));
  }
  return out;
}

}  // namespace adaptive_submod
