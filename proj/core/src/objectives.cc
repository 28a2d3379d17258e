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

#include "adaptive_submod/objectives.h"

#include <algorithm>
#include <bit>
#include <string>

#include "adaptive_submod/errors.h"

namespace adaptive_submod {
namespace {

// Unit-weight coverage over a universe of at most 64 points.
class MaskCoverageAccumulator : public Accumulator {
 public:
  explicit MaskCoverageAccumulator(const std::vector<std::uint64_t>& masks) : masks_(masks) {}

  void reset(std::span<const ElementId> base) override {
    base_mask_ = 0;
    for (ElementId x : base) base_mask_ |= masks_[x];
    mask_ = base_mask_;
  }

  double extend(std::span<const ElementId> extra) override {
    for (ElementId x : extra) mask_ |= masks_[x];
    return static_cast<double>(std::popcount(mask_));
  }

  void rewind() override { mask_ = base_mask_; }

 private:
  const std::vector<std::uint64_t>& masks_;
  std::uint64_t base_mask_ = 0;
  std::uint64_t mask_ = 0;
};

class CountingCoverageAccumulator : public Accumulator {
 public:
  explicit CountingCoverageAccumulator(const CoverageInstance& inst)
      : inst_(inst), counts_(inst.universe_size, 0) {}

  void reset(std::span<const ElementId> base) override {
    rewind();
    for (std::uint32_t p : base_log_) --counts_[p];
    base_log_.clear();
    value_ = 0.0;
    for (ElementId x : base) add(x, base_log_);
    base_value_ = value_;
  }

  double extend(std::span<const ElementId> extra) override {
    for (ElementId x : extra) add(x, log_);
    return value_;
  }

  void rewind() override {
    for (std::uint32_t p : log_) --counts_[p];
    log_.clear();
    value_ = base_value_;
  }

 private:
  void add(ElementId x, std::vector<std::uint32_t>& log) {
    for (std::uint32_t p : inst_.sets[x]) {
      if (counts_[p]++ == 0) value_ += inst_.weights[p];
      log.push_back(p);
    }
  }

  const CoverageInstance& inst_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> base_log_;
  std::vector<std::uint32_t> log_;
  double value_ = 0.0;
  double base_value_ = 0.0;
};

class FacilityAccumulator : public Accumulator {
 public:
  explicit FacilityAccumulator(const FacilityInstance& inst)
      : inst_(inst), best_(inst.clients(), 0.0) {}

  void reset(std::span<const ElementId> base) override {
    log_.clear();
    std::fill(best_.begin(), best_.end(), 0.0);
    value_ = 0.0;
    for (ElementId x : base) add(x, /*record=*/false);
    base_value_ = value_;
  }

  double extend(std::span<const ElementId> extra) override {
    for (ElementId x : extra) add(x, /*record=*/true);
    return value_;
  }

  void rewind() override {
    for (auto it = log_.rbegin(); it != log_.rend(); ++it) best_[it->first] = it->second;
    log_.clear();
    value_ = base_value_;
  }

 private:
  void add(ElementId x, bool record) {
    const std::vector<double>& row = inst_.similarity[x];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] > best_[j]) {
        if (record) log_.emplace_back(j, best_[j]);
        value_ += row[j] - best_[j];
        best_[j] = row[j];
      }
    }
  }

  const FacilityInstance& inst_;
  std::vector<double> best_;
  std::vector<std::pair<std::size_t, double>> log_;
  double value_ = 0.0;
  double base_value_ = 0.0;
};

class AdditiveAccumulator : public Accumulator {
 public:
  explicit AdditiveAccumulator(const AdditiveInstance& inst)
      : inst_(inst), present_(inst.n(), 0) {}

  void reset(std::span<const ElementId> base) override {
    rewind();
    for (ElementId x : base_members_) present_[x] = 0;
    base_members_.clear();
    value_ = 0.0;
    for (ElementId x : base) {
      if (!present_[x]) {
        present_[x] = 1;
        base_members_.push_back(x);
        value_ += inst_.weights[x];
      }
    }
    base_value_ = value_;
  }

  double extend(std::span<const ElementId> extra) override {
    for (ElementId x : extra) {
      if (!present_[x]) {
        present_[x] = 1;
        added_.push_back(x);
        value_ += inst_.weights[x];
      }
    }
    return value_;
  }

  void rewind() override {
    for (ElementId x : added_) present_[x] = 0;
    added_.clear();
    value_ = base_value_;
  }

 private:
  const AdditiveInstance& inst_;
  std::vector<char> present_;
  std::vector<ElementId> base_members_;
  std::vector<ElementId> added_;
  double value_ = 0.0;
  double base_value_ = 0.0;
};

void check_ids(std::span<const ElementId> s, std::size_t n) {
  for (ElementId x : s) {
    if (x >= n) throw InvalidInputError("element id " + std::to_string(x) + " out of range");
  }
}

}  // namespace

bool CoverageInstance::unit_weights() const {
  return std::all_of(weights.begin(), weights.end(), [](double w) { return w == 1.0; });
}

void CoverageInstance::validate() const {
  if (weights.size() != universe_size) {
    throw InvalidInputError("coverage instance needs one weight per universe point");
  }
  for (std::size_t p = 0; p < weights.size(); ++p) {
    if (!(weights[p] >= 0.0)) {
      throw InvalidInputError("weight of point " + std::to_string(p) + " is negative");
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::uint32_t p : sets[i]) {
      if (p >= universe_size) {
        throw InvalidInputError("set " + std::to_string(i) + " covers point " +
                                std::to_string(p) + " >= universe_size " +
                                std::to_string(universe_size));
      }
    }
  }
}

void FacilityInstance::validate() const {
  const std::size_t m = clients();
  for (std::size_t i = 0; i < similarity.size(); ++i) {
    if (similarity[i].size() != m) {
      throw InvalidInputError("similarity row " + std::to_string(i) + " has the wrong length");
    }
    for (double v : similarity[i]) {
      if (!(v >= 0.0)) throw InvalidInputError("similarities must be nonnegative");
    }
  }
}

void AdditiveInstance::validate() const {
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidInputError("additive weights must be nonnegative");
  }
}

std::size_t instance_size(const Instance& inst) {
  return std::visit([](const auto& i) { return i.n(); }, inst);
}

double coverage_value(const CoverageInstance& inst, const SubsetSelection& s) {
  s.validate(inst.n());
  std::vector<char> covered(inst.universe_size, 0);
  double v = 0.0;
  for (ElementId x : s) {
    for (std::uint32_t p : inst.sets[x]) {
      if (!covered[p]) {
        covered[p] = 1;
        v += inst.weights[p];
      }
    }
  }
  return v;
}

double facility_value(const FacilityInstance& inst, const SubsetSelection& s) {
  s.validate(inst.n());
  double v = 0.0;
  for (std::size_t j = 0; j < inst.clients(); ++j) {
    double best = 0.0;
    for (ElementId x : s) best = std::max(best, inst.similarity[x][j]);
    v += best;
  }
  return v;
}

double additive_value(const AdditiveInstance& inst, const SubsetSelection& s) {
  s.validate(inst.n());
  double v = 0.0;
  for (ElementId x : s) v += inst.weights[x];
  return v;
}

CoverageFunction::CoverageFunction(CoverageInstance inst)
    : inst_(std::move(inst)), unit_(inst_.unit_weights()) {
  inst_.validate();
  if (unit_ && inst_.universe_size <= 64) {
    masks_.assign(inst_.n(), 0);
    for (std::size_t i = 0; i < inst_.n(); ++i) {
      for (std::uint32_t p : inst_.sets[i]) masks_[i] |= std::uint64_t{1} << p;
    }
  }
}

double CoverageFunction::value(std::span<const ElementId> s) const {
  check_ids(s, inst_.n());
  std::vector<char> covered(inst_.universe_size, 0);
  double v = 0.0;
  for (ElementId x : s) {
    for (std::uint32_t p : inst_.sets[x]) {
      if (!covered[p]) {
        covered[p] = 1;
        v += inst_.weights[p];
      }
    }
  }
  return v;
}

std::unique_ptr<Accumulator> CoverageFunction::make_accumulator() const {
  if (!masks_.empty()) return std::make_unique<MaskCoverageAccumulator>(masks_);
  return std::make_unique<CountingCoverageAccumulator>(inst_);
}

FacilityFunction::FacilityFunction(FacilityInstance inst) : inst_(std::move(inst)) {
  inst_.validate();
}

double FacilityFunction::value(std::span<const ElementId> s) const {
  check_ids(s, inst_.n());
  double v = 0.0;
  for (std::size_t j = 0; j < inst_.clients(); ++j) {
    double best = 0.0;
    for (ElementId x : s) best = std::max(best, inst_.similarity[x][j]);
    v += best;
  }
  return v;
}

std::unique_ptr<Accumulator> FacilityFunction::make_accumulator() const {
  return std::make_unique<FacilityAccumulator>(inst_);
}

AdditiveFunction::AdditiveFunction(AdditiveInstance inst) : inst_(std::move(inst)) {
  inst_.validate();
}

double AdditiveFunction::value(std::span<const ElementId> s) const {
  check_ids(s, inst_.n());
  double v = 0.0;
  for (ElementId x : s) v += inst_.weights[x];
  return v;
}

std::unique_ptr<Accumulator> AdditiveFunction::make_accumulator() const {
  return std::make_unique<AdditiveAccumulator>(inst_);
}

std::shared_ptr<const SetFunction> make_function(const Instance& inst) {
  struct Visitor {
    std::shared_ptr<const SetFunction> operator()(const CoverageInstance& i) const {
      return std::make_shared<CoverageFunction>(i);
    }
    std::shared_ptr<const SetFunction> operator()(const FacilityInstance& i) const {
      return std::make_shared<FacilityFunction>(i);
    }
    std::shared_ptr<const SetFunction> operator()(const AdditiveInstance& i) const {
      return std::make_shared<AdditiveFunction>(i);
    }
  };
  return std::visit(Visitor{}, inst);
}

CoverageInstance gen_coverage(RandomSource& rng, std::size_t n, std::size_t universe,
                              std::size_t avg_set_size, bool weighted) {
  if (n == 0 || universe == 0) {
    throw InvalidInputError("coverage generator needs n >= 1 and universe >= 1");
  }
  CoverageInstance inst;
  inst.universe_size = universe;
  inst.sets.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t>& set = inst.sets[i];
    set.reserve(avg_set_size);
    for (std::size_t j = 0; j < avg_set_size; ++j) {
      set.push_back(static_cast<std::uint32_t>(rng.uniform_below(universe)));
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  inst.weights.assign(universe, 1.0);
  if (weighted) {
    for (double& w : inst.weights) w = rng.uniform01();
  }
  return inst;
}

FacilityInstance gen_facility(RandomSource& rng, std::size_t n, std::size_t clients) {
  if (n == 0 || clients == 0) {
    throw InvalidInputError("facility generator needs n >= 1 and clients >= 1");
  }
  FacilityInstance inst;
  inst.similarity.assign(n, std::vector<double>(clients));
  for (auto& row : inst.similarity) {
    for (double& v : row) v = rng.uniform01();
  }
  return inst;
}

AdditiveInstance gen_additive(RandomSource& rng, std::size_t n, std::uint32_t max_weight) {
  if (n == 0 || max_weight == 0) {
    throw InvalidInputError("additive generator needs n >= 1 and max_weight >= 1");
  }
  AdditiveInstance inst;
  inst.weights.resize(n);
  for (double& w : inst.weights) w = static_cast<double>(1 + rng.uniform_below(max_weight));
  return inst;
}

}  // namespace adaptive_submod
