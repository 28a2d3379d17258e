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

#ifndef ADAPTIVE_SUBMOD_INSTANCE_IO_H_
#define ADAPTIVE_SUBMOD_INSTANCE_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "adaptive_submod/objectives.h"

namespace adaptive_submod {

// Instance documents are JSON objects tagged by "kind":
//   coverage: {kind, n, universe_size, weights, sets}
//   facility: {kind, n, clients, similarity}
//   additive: {kind, n, weights}
// Reals are written as decimal strings with 17 significant digits so a
// save/load cycle is exact; plain JSON numbers are accepted on input.
// One set / row per line keeps fixtures diffable.
std::string serialize_instance(const Instance& inst);

// Throws ParseError on malformed JSON (with line:column), missing or mistyped
// keys, or values that fail validation.
Instance parse_instance(std::string_view text);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_digest(std::string_view bytes);

}  // namespace adaptive_submod

#endif  // ADAPTIVE_SUBMOD_INSTANCE_IO_H_
