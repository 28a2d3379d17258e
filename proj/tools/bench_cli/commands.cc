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

#include "bench_cli/commands.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "adaptive_submod/adaptive_submod.h"
#include "bench_cli/suites.h"

namespace bench_cli {
namespace as = adaptive_submod;

as::Instance generate_instance(const GenSpec& spec) {
  if (spec.n == 0) throw UsageError("--n must be positive");
  as::RandomSource rng(spec.seed);
  if (spec.kind == "coverage") {
    const std::size_t universe = spec.universe ? spec.universe : 3 * spec.n;
    if (spec.set_size == 0) throw UsageError("--set-size must be positive");
    return as::gen_coverage(rng, spec.n, universe, spec.set_size, spec.weighted);
  }
  if (spec.kind == "facility") {
    if (spec.clients == 0) throw UsageError("--clients must be positive");
    return as::gen_facility(rng, spec.n, spec.clients);
  }
  if (spec.kind == "additive") {
    if (spec.max_weight == 0) throw UsageError("--max-weight must be positive");
    return as::gen_additive(rng, spec.n, spec.max_weight);
  }
  throw UsageError("unknown --kind: " + spec.kind);
}

std::string describe(const GenSpec& spec) {
  std::string s = spec.kind + ":n=" + std::to_string(spec.n);
  if (spec.kind == "coverage") {
    s += ",universe=" + std::to_string(spec.universe ? spec.universe : 3 * spec.n) +
         ",set_size=" + std::to_string(spec.set_size) +
         ",weighted=" + std::to_string(spec.weighted ? 1 : 0);
  } else if (spec.kind == "facility") {
    s += ",clients=" + std::to_string(spec.clients);
  } else {
    s += ",max_weight=" + std::to_string(spec.max_weight);
  }
  return s + ",seed=" + std::to_string(spec.seed);
}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"exhaustive", "binary-search", "subsample",
                                              "greedy",     "lazy-greedy",   "brute-force",
                                              "cover",      "brute-cover"};
  return names;
}

bool is_cover_algorithm(const std::string& name) {
  return name == "cover" || name == "brute-cover";
}

namespace {

void attach_reference(RunReport& rep, double opt) {
  rep.opt = opt;
  if (opt != 0.0) rep.ratio = rep.value / opt;
}

}  // namespace

RunReport run_algorithm(const RunRequest& req) {
  if (!req.instance) throw UsageError("no instance");
  const std::string& alg = req.algorithm;
  if (std::find(algorithm_names().begin(), algorithm_names().end(), alg) ==
      algorithm_names().end()) {
    throw UsageError("unknown --alg: " + alg);
  }
  const bool cover = is_cover_algorithm(alg);
  if (cover && !req.target) throw UsageError("--L is required for " + alg);
  if (!cover && !req.k) throw UsageError("--k is required for " + alg);
  if (cover && req.brute_force_reference) {
    throw UsageError("--ref brute-force applies to cardinality algorithms");
  }

  auto fn = as::make_function(*req.instance);
  as::OracleHandle oracle(fn, req.oracle);
  as::RandomSource rng(req.seed);

  RunReport rep;
  rep.algorithm = alg;
  rep.instance = req.instance_label;
  rep.n = as::instance_size(*req.instance);
  rep.k = cover ? *req.target : static_cast<double>(*req.k);
  rep.seed = req.seed;
  rep.eps = req.eps;
  rep.delta = alg == "subsample" ? req.eps / 4.0 : req.delta;

  const auto start = std::chrono::steady_clock::now();
  as::SubsetSelection solution;
  double value = 0.0;
  if (alg == "exhaustive") {
    auto r = as::exhaustive_maximization(
        oracle, as::ExhaustiveOptions{*req.k, req.eps, req.delta, std::nullopt}, rng);
    solution = std::move(r.solution);
    value = r.value;
  } else if (alg == "binary-search") {
    auto r = as::binary_search_maximization(oracle, *req.k, req.eps, req.delta, rng);
    solution = std::move(r.solution);
    value = r.value;
  } else if (alg == "subsample") {
    auto r = as::subsample_maximization(oracle, *req.k, req.eps, rng);
    solution = std::move(r.solution);
    value = r.value;
  } else if (alg == "greedy" || alg == "lazy-greedy") {
    auto r = alg == "greedy" ? as::greedy(oracle, *req.k) : as::lazy_greedy(oracle, *req.k);
    solution = std::move(r.solution);
    value = r.value;
  } else if (alg == "brute-force") {
    auto r = as::brute_force_max(oracle, *req.k);
    solution = std::move(r.best_set);
    value = r.best_value;
  } else if (alg == "cover") {
    auto r = as::adaptive_greedy_cover(oracle, *req.target, rng);
    solution = std::move(r.solution);
    value = r.value;
  } else {
    auto r = as::brute_force_cover(oracle, *req.target);
    solution = std::move(r.best_set);
    value = r.best_value;
  }
  const auto stop = std::chrono::steady_clock::now();

  rep.value = value;
  rep.size = solution.size();
  const as::LedgerCounts counts = oracle.counts();
  rep.queries = counts.total_queries;
  rep.rounds = counts.adaptive_rounds;
  if (!req.omit_timing) {
    rep.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  }
  if (req.brute_force_reference) {
    as::OracleHandle ref(fn, as::OracleOptions{req.oracle.threads, {}, {}});
    attach_reference(rep, as::brute_force_max(ref, *req.k).best_value);
  }
  return rep;
}

namespace {

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t value, std::ostream& err) {
  if (opt->count() > 0) return value;
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  err << "seed: " << seed << '\n';
  return seed;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty item in list '" + text + "'");
    out.push_back(item);
  }
  return out;
}

template <class T>
T parse_number(const std::string& s, const std::string& flag) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(flag + ": cannot parse '" + s + "'");
  }
  return v;
}

// "1,2,5..8" -> 1 2 5 6 7 8.
std::vector<std::uint64_t> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<std::uint64_t> out;
  for (const std::string& item : split_commas(text)) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_number<std::uint64_t>(item, flag));
      continue;
    }
    const auto lo = parse_number<std::uint64_t>(item.substr(0, dots), flag);
    const auto hi = parse_number<std::uint64_t>(item.substr(dots + 2), flag);
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  for (const std::string& item : split_commas(text)) out.push_back(parse_number<double>(item, flag));
  return out;
}

void add_gen_options(CLI::App* cmd, GenSpec& spec) {
  cmd->add_option("--kind", spec.kind, "coverage | facility | additive")
      ->check(CLI::IsMember({"coverage", "facility", "additive"}));
  cmd->add_option("--universe", spec.universe, "coverage universe size (default 3n)");
  cmd->add_option("--set-size", spec.set_size, "coverage draws per element");
  cmd->add_flag("--weighted", spec.weighted, "coverage point weights uniform in [0, 1)");
  cmd->add_option("--clients", spec.clients, "facility clients");
  cmd->add_option("--max-weight", spec.max_weight, "additive weights in [1, max]");
}

struct RunFlags {
  std::string alg;
  std::string inst;
  std::size_t k = 0;
  double target = 0.0;
  double eps = 0.25;
  double delta = 0.1;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string ref;
  bool omit_timing = false;
  bool header = false;
  bool summary = false;
  std::uint64_t max_queries = 0;
  double time_limit_ms = 0.0;
  const CLI::Option* k_opt = nullptr;
  const CLI::Option* target_opt = nullptr;
  const CLI::Option* seed_opt = nullptr;
  const CLI::Option* max_queries_opt = nullptr;
  const CLI::Option* time_limit_opt = nullptr;
};

as::OracleOptions budget_options(const RunFlags& f) {
  as::OracleOptions o;
  if (f.max_queries_opt->count()) o.max_queries = f.max_queries;
  if (f.time_limit_opt->count()) {
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double, std::milli>(f.time_limit_ms));
  }
  return o;
}

int cmd_gen(const GenSpec& spec, const std::string& path, std::ostream& out) {
  const as::Instance inst = generate_instance(spec);
  const std::string text = as::serialize_instance(inst);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
  file.close();
  if (!file) throw UsageError("cannot write " + path);
  out << as::fnv1a_digest(text) << "  " << path << '\n';
  return kExitOk;
}

int cmd_run(const RunFlags& f, std::ostream& out, std::ostream& err) {
  RunRequest req;
  req.algorithm = f.alg;
  req.instance_label = f.inst;
  req.instance = std::make_shared<const as::Instance>(as::load_instance(f.inst));
  if (f.k_opt->count()) req.k = f.k;
  if (f.target_opt->count()) req.target = f.target;
  req.eps = f.eps;
  req.delta = f.delta;
  req.seed = resolve_seed(f.seed_opt, f.seed, err);
  req.omit_timing = f.omit_timing;
  req.brute_force_reference = f.ref == "brute-force";
  req.oracle = budget_options(f);
  const RunReport rep = run_algorithm(req);
  if (f.format == "json") {
    out << to_json_line(rep) << '\n';
  } else {
    if (f.header) out << kCsvHeader << '\n';
    out << to_csv_row(rep) << '\n';
  }
  if (f.summary) {
    err << rep.algorithm << ": value " << format_real(rep.value) << " with " << rep.size
        << " elements, " << rep.queries << " queries in " << rep.rounds << " rounds\n";
  }
  return kExitOk;
}

struct SweepFlags {
  std::string algs;
  std::string inst;
  std::string ns;
  std::string ks;
  std::string epss = "0.25";
  std::string seeds;
  double delta = 0.1;
  std::string ref;
  bool omit_timing = false;
  GenSpec gen;
  const CLI::Option* ns_opt = nullptr;
};

int cmd_sweep(SweepFlags f, std::ostream& out) {
  const std::vector<std::string> algs = split_commas(f.algs);
  for (const std::string& a : algs) {
    if (std::find(algorithm_names().begin(), algorithm_names().end(), a) ==
        algorithm_names().end()) {
      throw UsageError("unknown algorithm in --alg: " + a);
    }
  }
  const bool ref = f.ref == "brute-force";
  const auto ks = parse_int_list(f.ks, "--k");
  const auto epss = parse_real_list(f.epss, "--eps");
  const auto seeds = parse_int_list(f.seeds, "--seeds");

  std::vector<std::pair<std::string, std::shared_ptr<const as::Instance>>> instances;
  if (!f.inst.empty()) {
    if (f.ns_opt->count()) throw UsageError("--n and --inst are exclusive");
    instances.emplace_back(f.inst, std::make_shared<const as::Instance>(as::load_instance(f.inst)));
  } else {
    for (std::uint64_t n : parse_int_list(f.ns, "--n")) {
      f.gen.n = n;
      instances.emplace_back(describe(f.gen),
                             std::make_shared<const as::Instance>(generate_instance(f.gen)));
    }
  }

  out << kCsvHeader << '\n';
  for (const auto& [label, inst] : instances) {
    for (std::uint64_t k : ks) {
      std::optional<double> opt;
      for (double eps : epss) {
        for (std::uint64_t seed : seeds) {
          for (const std::string& alg : algs) {
            RunRequest req;
            req.algorithm = alg;
            req.instance_label = label;
            req.instance = inst;
            if (is_cover_algorithm(alg)) {
              req.target = static_cast<double>(k);
            } else {
              req.k = k;
            }
            req.eps = eps;
            req.delta = f.delta;
            req.seed = seed;
            req.omit_timing = f.omit_timing;
            RunReport rep = run_algorithm(req);
            if (ref && !is_cover_algorithm(alg)) {
              if (!opt) {
                as::OracleHandle oracle(as::make_function(*inst));
                opt = as::brute_force_max(oracle, k).best_value;
              }
              attach_reference(rep, *opt);
            }
            out << to_csv_row(rep) << '\n';
          }
        }
      }
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, SuiteParams params, const CLI::Option* seed_opt,
               std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw UsageError("unknown suite: " + suite);
  }
  params.seed = resolve_seed(seed_opt, seed, err);
  const SuiteResult res = run_suite(suite, params);
  out << "suite " << res.suite << '\n';
  for (const Check& c : res.checks) out << format_check(c) << '\n';
  for (const std::string& note : res.notes) out << "# " << note << '\n';
  out << (res.passed() ? "PASS" : "FAIL") << '\n';
  return res.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adaptive submodular maximization bench harness", "bench_cli"};
  app.require_subcommand(1);

  GenSpec gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("--n", gen.n, "ground set size")->required();
  add_gen_options(gen_cmd, gen);
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("-o,--output", gen_out, "instance path")->required();

  RunFlags run;
  auto* run_cmd = app.add_subcommand("run", "run one algorithm on an instance file");
  run_cmd->add_option("--alg", run.alg, "algorithm")
      ->required()
      ->check(CLI::IsMember(algorithm_names()));
  run_cmd->add_option("--inst", run.inst, "instance path")->required();
  run.k_opt = run_cmd->add_option("--k", run.k, "cardinality budget");
  run.target_opt = run_cmd->add_option("--L", run.target, "cover target");
  run_cmd->add_option("--eps", run.eps, "accuracy");
  run_cmd->add_option("--delta", run.delta, "failure probability");
  run.seed_opt = run_cmd->add_option("--seed", run.seed, "random seed");
  run_cmd->add_option("--format", run.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  run_cmd->add_flag("--header", run.header, "csv: print the header first");
  run_cmd->add_option("--ref", run.ref, "reference solver")->check(CLI::IsMember({"brute-force"}));
  run_cmd->add_flag("--omit-timing", run.omit_timing, "leave wall_ms empty");
  run_cmd->add_flag("--summary", run.summary, "human summary on stderr");
  run.max_queries_opt = run_cmd->add_option("--max-queries", run.max_queries, "query budget");
  run.time_limit_opt = run_cmd->add_option("--time-limit-ms", run.time_limit_ms, "wall budget");

  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV over a parameter grid");
  sweep_cmd->add_option("--alg", sweep.algs, "comma-separated algorithms")->required();
  sweep_cmd->add_option("--inst", sweep.inst, "fixed instance path");
  sweep.ns_opt = sweep_cmd->add_option("--n", sweep.ns, "ground set sizes to generate");
  sweep_cmd->add_option("--k", sweep.ks, "budgets (targets L for cover algorithms)");
  sweep_cmd->add_option("--eps", sweep.epss, "accuracies");
  sweep_cmd->add_option("--seeds", sweep.seeds, "run seeds, e.g. 1..5");
  sweep_cmd->add_option("--delta", sweep.delta, "failure probability");
  sweep_cmd->add_option("--ref", sweep.ref, "reference solver")
      ->check(CLI::IsMember({"brute-force"}));
  sweep_cmd->add_flag("--omit-timing", sweep.omit_timing, "leave wall_ms empty");
  add_gen_options(sweep_cmd, sweep.gen);
  sweep_cmd->add_option("--gen-seed", sweep.gen.seed, "generator seed");

  std::string suite;
  SuiteParams params;
  std::uint64_t verify_seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--n", params.n, "ground set size");
  verify_cmd->add_option("--k", params.k, "budget");
  verify_cmd->add_option("--eps", params.eps, "accuracy");
  verify_cmd->add_option("--delta", params.delta, "failure probability");
  verify_cmd->add_option("--ell", params.ell, "subsampling factor");
  verify_cmd->add_option("--trials", params.trials, "trials or runs");
  const CLI::Option* verify_seed_opt = verify_cmd->add_option("--seed", verify_seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, gen_out, out);
    if (*run_cmd) return cmd_run(run, out, err);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    return cmd_verify(suite, params, verify_seed_opt, verify_seed, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const as::TooLargeError& e) {
    err << "too large: " << e.what() << '\n';
  } catch (const as::BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << '\n';
  } catch (const as::InfeasibleTargetError& e) {
    err << "infeasible: " << e.what() << '\n';
  } catch (const as::ParseError& e) {
    err << "bad instance: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"bench_cli"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bench_cli
