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

#include "bench_cli/report.h"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace bench_cli {
namespace {

// The JSON writer prints the shortest round-trip form, so rounding first
// yields the 12-digit decimal.
nlohmann::ordered_json real_or_null(const std::optional<double>& v) {
  if (!v) return nullptr;
  return std::stod(format_real(*v));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string to_json_line(const RunReport& r) {
  nlohmann::ordered_json j;
  j["algorithm"] = r.algorithm;
  j["instance"] = r.instance;
  j["n"] = r.n;
  j["k"] = real_or_null(r.k);
  j["eps"] = real_or_null(r.eps);
  j["delta"] = real_or_null(r.delta);
  j["seed"] = r.seed;
  j["value"] = real_or_null(r.value);
  j["size"] = r.size;
  j["queries"] = r.queries;
  j["rounds"] = r.rounds;
  j["wall_ms"] = real_or_null(r.wall_ms);
  j["opt"] = real_or_null(r.opt);
  j["ratio"] = real_or_null(r.ratio);
  return j.dump();
}

std::string to_csv_row(const RunReport& r) {
  auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
  return csv_field(r.algorithm) + "," + std::to_string(r.n) + "," + format_real(r.k) + "," +
         format_real(r.eps) + "," + format_real(r.delta) + "," + std::to_string(r.seed) + "," +
         format_real(r.value) + "," + std::to_string(r.size) + "," + std::to_string(r.queries) +
         "," + std::to_string(r.rounds) + "," + opt(r.wall_ms) + "," + opt(r.opt) + "," +
         opt(r.ratio);
}

}  // namespace bench_cli
