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

#ifndef BENCH_CLI_SUITES_H_
#define BENCH_CLI_SUITES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bench_cli {

struct Check {
  std::string name;
  double measured = 0.0;
  std::string relation;  // "<=" or ">="
  double threshold = 0.0;
  bool pass = false;
};

Check at_most(std::string name, double measured, double threshold);
Check at_least(std::string name, double measured, double threshold);

// "name: measured <= threshold PASS"
std::string format_check(const Check& c);

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool passed() const;
};

// Unset fields take the suite's own defaults.
struct SuiteParams {
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<double> eps;
  std::optional<double> delta;
  std::optional<double> ell;
  std::optional<std::size_t> trials;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
};

const std::vector<std::string>& suite_names();

// Throws std::out_of_range for an unknown suite and
// adaptive_submod::InvalidInputError for unusable parameters.
SuiteResult run_suite(const std::string& name, const SuiteParams& params);

}  // namespace bench_cli

#endif  // BENCH_CLI_SUITES_H_
