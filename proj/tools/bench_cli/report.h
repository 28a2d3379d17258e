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

#ifndef BENCH_CLI_REPORT_H_
#define BENCH_CLI_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>

namespace bench_cli {

struct RunReport {
  std::string algorithm;
  std::string instance;
  std::size_t n = 0;
  double k = 0;              // cardinality budget, or the target L for cover runs
  double eps = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  double value = 0.0;
  std::size_t size = 0;
  std::uint64_t queries = 0;
  std::uint64_t rounds = 0;
  std::optional<double> wall_ms;
  std::optional<double> opt;
  std::optional<double> ratio;
};

// Column order shared by CSV rows and JSON objects.
inline constexpr const char* kCsvHeader =
    "algorithm,n,k,eps,delta,seed,value,size,queries,rounds,wall_ms,opt,ratio";

// 12 significant digits.
std::string format_real(double v);

// One JSON object on one line; absent optionals are null.
std::string to_json_line(const RunReport& r);
// One CSV row in kCsvHeader order; absent optionals are empty.
std::string to_csv_row(const RunReport& r);

}  // namespace bench_cli

#endif  // BENCH_CLI_REPORT_H_
