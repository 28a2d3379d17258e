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

#ifndef ADAPTIVE_SUBMOD_ORACLE_H_
#define ADAPTIVE_SUBMOD_ORACLE_H_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "adaptive_submod/types.h"

namespace adaptive_submod {

// Incremental evaluation state owned by one worker. The current set starts
// at the base given to reset(); extend() grows it and returns f of the grown
// set; rewind() returns to the base. Implementations tolerate ids that are
// already present.
class Accumulator {
 public:
  virtual ~Accumulator() = default;
  virtual void reset(std::span<const ElementId> base) = 0;
  virtual double extend(std::span<const ElementId> extra) = 0;
  virtual void rewind() = 0;
};

// A set function f : 2^N -> R over the dense ground set [0, ground_size()).
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual std::size_t ground_size() const = 0;
  // `s` is duplicate-free with in-range ids.
  virtual double value(std::span<const ElementId> s) const = 0;
  // The default accumulator re-materializes the current set and calls value().
  virtual std::unique_ptr<Accumulator> make_accumulator() const;
};

// Independent instrumentation: counts every value() and extend() that reaches
// the wrapped function. Used to cross-check the oracle ledger.
class CountingFunction : public SetFunction {
 public:
  explicit CountingFunction(std::shared_ptr<const SetFunction> inner);
  std::size_t ground_size() const override { return inner_->ground_size(); }
  double value(std::span<const ElementId> s) const override;
  std::unique_ptr<Accumulator> make_accumulator() const override;
  std::uint64_t calls() const { return calls_->load(); }

 private:
  std::shared_ptr<const SetFunction> inner_;
  std::shared_ptr<std::atomic<std::uint64_t>> calls_;
};

struct LedgerCounts {
  std::uint64_t total_queries = 0;
  std::uint64_t adaptive_rounds = 0;
  friend bool operator==(const LedgerCounts&, const LedgerCounts&) = default;
};

// Query / adaptive-round accounting. Both counters only grow. Thread-safe.
class QueryLedger {
 public:
  LedgerCounts counts() const;
  std::uint64_t total_queries() const { return counts().total_queries; }
  std::uint64_t adaptive_rounds() const { return counts().adaptive_rounds; }

  void add_queries(std::uint64_t queries);
  void record_round(std::uint64_t queries);
  // Merges branches that ran in parallel: queries add up, rounds take the max.
  void absorb_parallel(std::span<const LedgerCounts> branches);

 private:
  mutable std::mutex mu_;
  LedgerCounts counts_;
};

struct OracleOptions {
  // Worker threads used inside one batch; 0 means default_thread_count().
  std::size_t threads = 0;
  // Optional caps shared by every handle derived from the root.
  std::optional<std::uint64_t> max_queries;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// ADAPTIVE_SUBMOD_THREADS if set to a positive integer, else the hardware
// concurrency (at least 1).
std::size_t default_thread_count();

// Per-worker view handed to the tasks of one round. Ids are local to the
// issuing handle; values are in the handle's frame (shift subtracted).
class QueryContext {
 public:
  // Grows the current set and returns its value. One query.
  double extend(std::span<const ElementId> local_ids);
  double extend(ElementId x) { return extend(std::span<const ElementId>(&x, 1)); }
  void rewind() { acc_->rewind(); }
  std::uint64_t queries() const { return queries_; }

  // Worker-local buffers for tasks; empty at the start of each round.
  std::vector<ElementId> scratch;
  std::vector<std::uint32_t> scratch_index;

 private:
  friend class OracleHandle;
  QueryContext(Accumulator& acc, const std::vector<ElementId>* id_map,
               std::size_t ground_size, double offset)
      : acc_(&acc), id_map_(id_map), ground_size_(ground_size), offset_(offset) {}

  Accumulator* acc_;
  const std::vector<ElementId>* id_map_;
  std::size_t ground_size_;
  double offset_;
  std::uint64_t queries_ = 0;
  std::vector<ElementId> mapped_;
};

using RoundTask = std::function<void(std::size_t task_index, QueryContext& ctx)>;

// Instrumented access to a set function. A handle is a view: an id map into
// the root ground set, a base set prepended to every query and a constant
// offset subtracted from every value. That is enough to express both
// f_S(T) = f(S u T) - f(S) and restriction to a sub-ground-set. All views
// derived from one handle charge the same ledger, except fork().
class OracleHandle {
 public:
  explicit OracleHandle(std::shared_ptr<const SetFunction> fn, OracleOptions options = {});

  std::size_t ground_size() const { return ground_size_; }
  const QueryLedger& ledger() const { return *ledger_; }
  LedgerCounts counts() const { return ledger_->counts(); }
  std::size_t threads() const { return threads_; }

  // f(s). One query, no round.
  double evaluate(const SubsetSelection& s) const;
  // f applied to each query, order preserving. |queries| queries, one round.
  std::vector<double> evaluate_batch(std::span<const SubsetSelection> queries) const;
  // f(base u {x}) - f(base) in one round of two queries; zero queries when
  // x is already in base.
  double marginal(ElementId x, const SubsetSelection& base) const;

  // g(T) = f(base u T) - f(base); f(base) costs one singleton batch.
  OracleHandle shifted(const SubsetSelection& base) const;
  // Same, with f(base) (in this handle's frame) already known.
  OracleHandle shifted(const SubsetSelection& base, double base_value) const;
  // f restricted to `keep`; local id i of the result is keep[i].
  OracleHandle restricted(const SubsetSelection& keep) const;
  // Same view with a fresh ledger for a parallel branch; merge back with
  // absorb_parallel().
  OracleHandle fork() const;
  void absorb_parallel(std::span<const OracleHandle> branches) const;

  // One adaptive round: runs task(i, ctx) for i in [0, num_tasks), possibly
  // on several workers, each with its own accumulator reset to `local_base`.
  // Tasks must depend only on their index and on state fixed before the call.
  // The ledger gets one round and the exact number of extend() calls.
  // No-op when num_tasks == 0.
  void run_round(std::span<const ElementId> local_base, std::size_t num_tasks,
                 const RoundTask& task) const;

  // Root id of a local id.
  ElementId root_id(ElementId local) const;

 private:
  struct Budget {
    std::optional<std::uint64_t> max_queries;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::atomic<std::uint64_t> spent{0};
    void charge(std::uint64_t queries);
  };

  OracleHandle() = default;
  std::vector<ElementId> root_base(std::span<const ElementId> local_base) const;

  std::shared_ptr<const SetFunction> fn_;
  std::shared_ptr<QueryLedger> ledger_;
  std::shared_ptr<Budget> budget_;
  std::shared_ptr<const std::vector<ElementId>> id_map_;  // null = identity
  std::vector<ElementId> base_;                           // root ids
  double offset_ = 0.0;
  std::size_t ground_size_ = 0;
  std::size_t threads_ = 1;
};

}  // namespace adaptive_submod

#endif  // ADAPTIVE_SUBMOD_ORACLE_H_
