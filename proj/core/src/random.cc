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

#include "adaptive_submod/random.h"

#include <string>

#include "adaptive_submod/errors.h"

namespace adaptive_submod {

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), key_(Mix(Mix(seed) ^ (stream_id * kGolden + 1))) {}

SubsetSelection sample_uniform_subset(RandomSource& rng, const SubsetSelection& pool,
                                      std::size_t t) {
  if (t > pool.size()) {
    throw InvalidInputError("cannot draw " + std::to_string(t) + " elements from a pool of " +
                            std::to_string(pool.size()));
  }
  std::vector<ElementId> work(pool.begin(), pool.end());
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t j = i + rng.uniform_below(work.size() - i);
    std::swap(work[i], work[j]);
  }
  work.resize(t);
  return SubsetSelection(std::move(work));
}

SubsetSelection subsample_bernoulli(RandomSource& rng, const SubsetSelection& pool,
                                    double prob) {
  if (!(prob >= 0.0 && prob <= 1.0)) {
    throw InvalidInputError("retention probability must lie in [0, 1]");
  }
  std::vector<ElementId> kept;
  for (ElementId x : pool) {
    if (rng.bernoulli(prob)) kept.push_back(x);
  }
  return SubsetSelection(std::move(kept));
}

}  // namespace adaptive_submod
