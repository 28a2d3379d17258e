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

#ifndef BENCH_CLI_COMMANDS_H_
#define BENCH_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adaptive_submod/objectives.h"
#include "adaptive_submod/oracle.h"
#include "bench_cli/report.h"

namespace bench_cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenSpec {
  std::string kind = "coverage";  // coverage | facility | additive
  std::size_t n = 0;
  std::size_t universe = 0;       // 0 means 3 n
  std::size_t set_size = 8;
  std::size_t clients = 10;
  std::uint32_t max_weight = 10;
  bool weighted = false;
  std::uint64_t seed = 0;
};

adaptive_submod::Instance generate_instance(const GenSpec& spec);
// "coverage:n=100,universe=300,set_size=8,weighted=0,seed=7" and the like.
std::string describe(const GenSpec& spec);

const std::vector<std::string>& algorithm_names();
bool is_cover_algorithm(const std::string& name);

struct RunRequest {
  std::string algorithm;
  std::string instance_label;
  std::shared_ptr<const adaptive_submod::Instance> instance;
  std::optional<std::size_t> k;
  std::optional<double> target;  // L, cover algorithms only
  double eps = 0.25;
  double delta = 0.1;
  std::uint64_t seed = 0;
  bool omit_timing = false;
  bool brute_force_reference = false;
  adaptive_submod::OracleOptions oracle;
};

// Library errors propagate; a missing k or L or an unknown algorithm
// raises UsageError.
RunReport run_algorithm(const RunRequest& request);

// argv[0] is the program name. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bench_cli

#endif  // BENCH_CLI_COMMANDS_H_
