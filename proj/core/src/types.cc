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

#include "adaptive_submod/types.h"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "adaptive_submod/errors.h"

namespace adaptive_submod {

SubsetSelection::SubsetSelection(std::vector<ElementId> members) : members_(std::move(members)) {
  std::unordered_set<ElementId> seen;
  seen.reserve(members_.size());
  for (ElementId x : members_) {
    if (!seen.insert(x).second) {
      throw InvalidInputError("duplicate element " + std::to_string(x) + " in selection");
    }
  }
}

SubsetSelection::SubsetSelection(std::initializer_list<ElementId> members)
    : SubsetSelection(std::vector<ElementId>(members)) {}

SubsetSelection SubsetSelection::Range(std::size_t n) {
  SubsetSelection s;
  s.members_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.members_[i] = static_cast<ElementId>(i);
  return s;
}

bool SubsetSelection::contains(ElementId x) const {
  return std::find(members_.begin(), members_.end(), x) != members_.end();
}

void SubsetSelection::merge_disjoint(std::span<const ElementId> extra) {
  if (extra.empty()) return;
  std::unordered_set<ElementId> present(members_.begin(), members_.end());
  for (ElementId x : extra) {
    if (!present.insert(x).second) {
      throw InvalidInputError("merge of element " + std::to_string(x) +
                              " that is already selected");
    }
  }
  members_.insert(members_.end(), extra.begin(), extra.end());
}

void SubsetSelection::validate(std::size_t ground_size) const {
  for (ElementId x : members_) {
    if (x >= ground_size) {
      throw InvalidInputError("element id " + std::to_string(x) +
                              " out of range for ground set of size " +
                              std::to_string(ground_size));
    }
  }
}

std::vector<ElementId> SubsetSelection::sorted() const {
  std::vector<ElementId> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

bool SubsetSelection::same_set(const SubsetSelection& other) const {
  return size() == other.size() && sorted() == other.sorted();
}

}  // namespace adaptive_submod
