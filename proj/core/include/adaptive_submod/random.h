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

#ifndef ADAPTIVE_SUBMOD_RANDOM_H_
#define ADAPTIVE_SUBMOD_RANDOM_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "adaptive_submod/types.h"

namespace adaptive_submod {

// Counter-based splittable generator. Word i of a stream is
// mix(key + (i + 1) * golden) where key is derived from (seed, stream_id), so
// the sequence is a pure function of (seed, stream_id) and draws can be
// addressed by index. split() derives child streams for parallel branches.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed = 0, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Child stream labelled `branch`. Depends only on (seed, stream_id, branch).
  RandomSource split(std::uint64_t branch) const {
    return RandomSource(seed_, branch, Mix(key_ ^ Mix(branch + 0xD1B54A32D192ED03ULL)));
  }

  std::uint64_t operator()() { return Mix(key_ + (++counter_) * kGolden); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() {
    return std::numeric_limits<std::uint64_t>::max();
  }

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    // Lemire's multiply-shift with rejection.
    __extension__ using Wide = unsigned __int128;
    Wide m = static_cast<Wide>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<Wide>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }
  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  bool bernoulli(double prob) { return uniform01() < prob; }

  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  RandomSource(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t key)
      : seed_(seed), stream_id_(stream_id), key_(key) {}

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Uniform size-t subset of `pool` without replacement (partial Fisher-Yates).
// Throws InvalidInputError if t > |pool|.
SubsetSelection sample_uniform_subset(RandomSource& rng, const SubsetSelection& pool,
                                      std::size_t t);

// Keeps each member of `pool` independently with probability `prob`.
// Throws InvalidInputError unless 0 <= prob <= 1.
SubsetSelection subsample_bernoulli(RandomSource& rng, const SubsetSelection& pool,
                                    double prob);

}  // namespace adaptive_submod

#endif  // ADAPTIVE_SUBMOD_RANDOM_H_
