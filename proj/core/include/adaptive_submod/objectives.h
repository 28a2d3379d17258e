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

#ifndef ADAPTIVE_SUBMOD_OBJECTIVES_H_
#define ADAPTIVE_SUBMOD_OBJECTIVES_H_

#include <cstdint>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "adaptive_submod/oracle.h"
#include "adaptive_submod/random.h"
#include "adaptive_submod/types.h"

namespace adaptive_submod {

// Weighted coverage: element i covers sets[i] (points of [0, universe_size)),
// f(S) = total weight of the points covered by the union.
struct CoverageInstance {
  std::size_t universe_size = 0;
  std::vector<double> weights;                    // one per point
  std::vector<std::vector<std::uint32_t>> sets;   // one per element

  std::size_t n() const { return sets.size(); }
  bool unit_weights() const;
  // Throws InvalidInputError on a point >= universe_size or a negative weight.
  void validate() const;
  friend bool operator==(const CoverageInstance&, const CoverageInstance&) = default;
};

// Facility location: f(S) = sum_j max_{i in S} similarity[i][j], f(empty) = 0.
struct FacilityInstance {
  std::vector<std::vector<double>> similarity;    // n rows x m clients

  std::size_t n() const { return similarity.size(); }
  std::size_t clients() const { return similarity.empty() ? 0 : similarity.front().size(); }
  void validate() const;
  friend bool operator==(const FacilityInstance&, const FacilityInstance&) = default;
};

// Modular function f(S) = sum of weights.
struct AdditiveInstance {
  std::vector<double> weights;

  std::size_t n() const { return weights.size(); }
  void validate() const;
  friend bool operator==(const AdditiveInstance&, const AdditiveInstance&) = default;
};

using Instance = std::variant<CoverageInstance, FacilityInstance, AdditiveInstance>;

std::size_t instance_size(const Instance& inst);

double coverage_value(const CoverageInstance& inst, const SubsetSelection& s);
double facility_value(const FacilityInstance& inst, const SubsetSelection& s);
double additive_value(const AdditiveInstance& inst, const SubsetSelection& s);

class CoverageFunction : public SetFunction {
 public:
  explicit CoverageFunction(CoverageInstance inst);
  std::size_t ground_size() const override { return inst_.n(); }
  double value(std::span<const ElementId> s) const override;
  std::unique_ptr<Accumulator> make_accumulator() const override;
  const CoverageInstance& instance() const { return inst_; }

 private:
  CoverageInstance inst_;
  bool unit_;
  // One 64-bit cover mask per element when the universe fits in a word.
  std::vector<std::uint64_t> masks_;
};

class FacilityFunction : public SetFunction {
 public:
  explicit FacilityFunction(FacilityInstance inst);
  std::size_t ground_size() const override { return inst_.n(); }
  double value(std::span<const ElementId> s) const override;
  std::unique_ptr<Accumulator> make_accumulator() const override;
  const FacilityInstance& instance() const { return inst_; }

 private:
  FacilityInstance inst_;
};

class AdditiveFunction : public SetFunction {
 public:
  explicit AdditiveFunction(AdditiveInstance inst);
  std::size_t ground_size() const override { return inst_.n(); }
  double value(std::span<const ElementId> s) const override;
  std::unique_ptr<Accumulator> make_accumulator() const override;
  const AdditiveInstance& instance() const { return inst_; }

 private:
  AdditiveInstance inst_;
};

std::shared_ptr<const SetFunction> make_function(const Instance& inst);

// Each element's set samples avg_set_size points with replacement, then
// deduplicates. Weights are 1, or uniform in [0, 1) when `weighted`.
// Throws InvalidInputError if n or universe is zero.
CoverageInstance gen_coverage(RandomSource& rng, std::size_t n, std::size_t universe,
                              std::size_t avg_set_size, bool weighted);
// Similarities uniform in [0, 1).
FacilityInstance gen_facility(RandomSource& rng, std::size_t n, std::size_t clients);
// Weights uniform integers in [1, max_weight].
AdditiveInstance gen_additive(RandomSource& rng, std::size_t n, std::uint32_t max_weight);

}  // namespace adaptive_submod

#endif  // ADAPTIVE_SUBMOD_OBJECTIVES_H_
