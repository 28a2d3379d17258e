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

#ifndef ADAPTIVE_SUBMOD_TYPES_H_
#define ADAPTIVE_SUBMOD_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace adaptive_submod {

// Dense index into the ground set [0, n).
using ElementId = std::uint32_t;

// A duplicate-free collection of element ids. Member order is insertion order;
// it is significant only for reproducibility, never for set semantics.
class SubsetSelection {
 public:
  SubsetSelection() = default;
  // Throws InvalidInputError on duplicate members.
  explicit SubsetSelection(std::vector<ElementId> members);
  SubsetSelection(std::initializer_list<ElementId> members);

  // {0, 1, ..., n-1}.
  static SubsetSelection Range(std::size_t n);

  std::span<const ElementId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  ElementId operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(ElementId x) const;

  // Appends members of `extra`; throws InvalidInputError if any of them is
  // already present (merges in the algorithms are always disjoint).
  void merge_disjoint(std::span<const ElementId> extra);

  // Throws InvalidInputError if any member is >= ground_size.
  void validate(std::size_t ground_size) const;

  // Members in ascending order.
  std::vector<ElementId> sorted() const;

  // Set equality (order-insensitive).
  bool same_set(const SubsetSelection& other) const;

  friend bool operator==(const SubsetSelection&, const SubsetSelection&) = default;

 private:
  std::vector<ElementId> members_;
};

}  // namespace adaptive_submod

#endif  // ADAPTIVE_SUBMOD_TYPES_H_
