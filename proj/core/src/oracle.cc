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

#include "adaptive_submod/oracle.h"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "adaptive_submod/errors.h"

namespace adaptive_submod {
namespace {

// Fallback accumulator: keeps the current set explicitly.
class MaterializingAccumulator : public Accumulator {
 public:
  explicit MaterializingAccumulator(const SetFunction& fn)
      : fn_(fn), present_(fn.ground_size(), 0) {}

  void reset(std::span<const ElementId> base) override {
    for (ElementId x : current_) present_[x] = 0;
    current_.clear();
    for (ElementId x : base) push(x);
    base_size_ = current_.size();
  }

  double extend(std::span<const ElementId> extra) override {
    for (ElementId x : extra) push(x);
    return fn_.value(current_);
  }

  void rewind() override {
    while (current_.size() > base_size_) {
      present_[current_.back()] = 0;
      current_.pop_back();
    }
  }

 private:
  void push(ElementId x) {
    if (!present_[x]) {
      present_[x] = 1;
      current_.push_back(x);
    }
  }

  const SetFunction& fn_;
  std::vector<char> present_;
  std::vector<ElementId> current_;
  std::size_t base_size_ = 0;
};

class CountingAccumulator : public Accumulator {
 public:
  CountingAccumulator(std::unique_ptr<Accumulator> inner, std::atomic<std::uint64_t>& calls)
      : inner_(std::move(inner)), calls_(calls) {}
  void reset(std::span<const ElementId> base) override { inner_->reset(base); }
  double extend(std::span<const ElementId> extra) override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_->extend(extra);
  }
  void rewind() override { inner_->rewind(); }

 private:
  std::unique_ptr<Accumulator> inner_;
  std::atomic<std::uint64_t>& calls_;
};

constexpr std::size_t kMinTasksPerWorker = 256;
constexpr std::size_t kBudgetCheckInterval = 1024;

}  // namespace

std::unique_ptr<Accumulator> SetFunction::make_accumulator() const {
  return std::make_unique<MaterializingAccumulator>(*this);
}

CountingFunction::CountingFunction(std::shared_ptr<const SetFunction> inner)
    : inner_(std::move(inner)), calls_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

double CountingFunction::value(std::span<const ElementId> s) const {
  calls_->fetch_add(1, std::memory_order_relaxed);
  return inner_->value(s);
}

std::unique_ptr<Accumulator> CountingFunction::make_accumulator() const {
  return std::make_unique<CountingAccumulator>(inner_->make_accumulator(), *calls_);
}

LedgerCounts QueryLedger::counts() const {
  std::lock_guard<std::mutex> lock(mu_);
  return counts_;
}

void QueryLedger::add_queries(std::uint64_t queries) {
  std::lock_guard<std::mutex> lock(mu_);
  counts_.total_queries += queries;
}

void QueryLedger::record_round(std::uint64_t queries) {
  std::lock_guard<std::mutex> lock(mu_);
  counts_.total_queries += queries;
  counts_.adaptive_rounds += 1;
}

void QueryLedger::absorb_parallel(std::span<const LedgerCounts> branches) {
  std::uint64_t queries = 0;
  std::uint64_t rounds = 0;
  for (const LedgerCounts& b : branches) {
    queries += b.total_queries;
    rounds = std::max(rounds, b.adaptive_rounds);
  }
  std::lock_guard<std::mutex> lock(mu_);
  counts_.total_queries += queries;
  counts_.adaptive_rounds += rounds;
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("ADAPTIVE_SUBMOD_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

namespace {

[[noreturn]] void throw_out_of_range(ElementId x, std::size_t ground_size) {
  throw InvalidInputError("element id " + std::to_string(x) +
                          " out of range for ground set of size " + std::to_string(ground_size));
}

}  // namespace

double QueryContext::extend(std::span<const ElementId> local_ids) {
  for (ElementId x : local_ids) {
    if (x >= ground_size_) throw_out_of_range(x, ground_size_);
  }
  ++queries_;
  if (!id_map_) return acc_->extend(local_ids) - offset_;
  mapped_.clear();
  for (ElementId x : local_ids) mapped_.push_back((*id_map_)[x]);
  return acc_->extend(mapped_) - offset_;
}

void OracleHandle::Budget::charge(std::uint64_t queries) {
  const std::uint64_t total = spent.fetch_add(queries, std::memory_order_relaxed) + queries;
  if (max_queries && total > *max_queries) {
    throw BudgetExceededError("query budget of " + std::to_string(*max_queries) +
                              " exhausted");
  }
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw BudgetExceededError("wall-clock budget exhausted after " + std::to_string(total) +
                              " queries");
  }
}

OracleHandle::OracleHandle(std::shared_ptr<const SetFunction> fn, OracleOptions options)
    : fn_(std::move(fn)),
      ledger_(std::make_shared<QueryLedger>()),
      budget_(std::make_shared<Budget>()) {
  if (!fn_) throw InvalidInputError("oracle needs a set function");
  budget_->max_queries = options.max_queries;
  budget_->deadline = options.deadline;
  ground_size_ = fn_->ground_size();
  threads_ = options.threads == 0 ? default_thread_count() : options.threads;
}

std::vector<ElementId> OracleHandle::root_base(std::span<const ElementId> local_base) const {
  std::vector<ElementId> out = base_;
  out.reserve(base_.size() + local_base.size());
  for (ElementId x : local_base) {
    if (x >= ground_size_) {
      throw InvalidInputError("element id " + std::to_string(x) +
                              " out of range for ground set of size " +
                              std::to_string(ground_size_));
    }
    out.push_back(id_map_ ? (*id_map_)[x] : x);
  }
  return out;
}

ElementId OracleHandle::root_id(ElementId local) const {
  if (local >= ground_size_) throw InvalidInputError("element id out of range");
  return id_map_ ? (*id_map_)[local] : local;
}

double OracleHandle::evaluate(const SubsetSelection& s) const {
  s.validate(ground_size_);
  auto acc = fn_->make_accumulator();
  acc->reset(base_);
  QueryContext ctx(*acc, id_map_.get(), ground_size_, offset_);
  const double v = ctx.extend(s.members());
  ledger_->add_queries(1);
  budget_->charge(1);
  return v;
}

std::vector<double> OracleHandle::evaluate_batch(std::span<const SubsetSelection> queries) const {
  if (queries.empty()) throw InvalidInputError("evaluate_batch needs at least one query");
  for (const SubsetSelection& q : queries) q.validate(ground_size_);
  std::vector<double> out(queries.size());
  run_round({}, queries.size(), [&](std::size_t i, QueryContext& ctx) {
    out[i] = ctx.extend(queries[i].members());
    ctx.rewind();
  });
  return out;
}

double OracleHandle::marginal(ElementId x, const SubsetSelection& base) const {
  if (x >= ground_size_) throw InvalidInputError("element id out of range");
  base.validate(ground_size_);
  if (base.contains(x)) return 0.0;
  double values[2];
  run_round(base.members(), 2, [&](std::size_t i, QueryContext& ctx) {
    values[i] = i == 0 ? ctx.extend(std::span<const ElementId>()) : ctx.extend(x);
    ctx.rewind();
  });
  return values[1] - values[0];
}

OracleHandle OracleHandle::shifted(const SubsetSelection& base) const {
  const SubsetSelection queries[1] = {base};
  const double base_value = evaluate_batch(queries)[0];
  return shifted(base, base_value);
}

OracleHandle OracleHandle::shifted(const SubsetSelection& base, double base_value) const {
  OracleHandle out = *this;
  out.base_ = root_base(base.members());
  out.offset_ = offset_ + base_value;
  return out;
}

OracleHandle OracleHandle::restricted(const SubsetSelection& keep) const {
  keep.validate(ground_size_);
  auto map = std::make_shared<std::vector<ElementId>>();
  map->reserve(keep.size());
  for (ElementId x : keep) map->push_back(id_map_ ? (*id_map_)[x] : x);
  OracleHandle out = *this;
  out.id_map_ = std::move(map);
  out.ground_size_ = keep.size();
  return out;
}

OracleHandle OracleHandle::fork() const {
  OracleHandle out = *this;
  out.ledger_ = std::make_shared<QueryLedger>();
  return out;
}

void OracleHandle::absorb_parallel(std::span<const OracleHandle> branches) const {
  std::vector<LedgerCounts> counts;
  counts.reserve(branches.size());
  for (const OracleHandle& b : branches) counts.push_back(b.counts());
  ledger_->absorb_parallel(counts);
}

void OracleHandle::run_round(std::span<const ElementId> local_base, std::size_t num_tasks,
                             const RoundTask& task) const {
  if (num_tasks == 0) return;
  const std::vector<ElementId> base = root_base(local_base);
  const std::size_t workers =
      std::clamp<std::size_t>((num_tasks + kMinTasksPerWorker - 1) / kMinTasksPerWorker, 1,
                              threads_);

  auto work = [&](std::size_t lo, std::size_t hi) -> std::uint64_t {
    auto acc = fn_->make_accumulator();
    acc->reset(base);
    QueryContext ctx(*acc, id_map_.get(), ground_size_, offset_);
    std::uint64_t charged = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      task(i, ctx);
      if ((i - lo + 1) % kBudgetCheckInterval == 0) {
        budget_->charge(ctx.queries() - charged);
        charged = ctx.queries();
      }
    }
    budget_->charge(ctx.queries() - charged);
    return ctx.queries();
  };

  std::uint64_t total = 0;
  if (workers == 1) {
    total = work(0, num_tasks);
  } else {
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = num_tasks * w / workers;
      const std::size_t hi = num_tasks * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        try {
          partial[w] = work(lo, hi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (std::uint64_t q : partial) total += q;
  }
  ledger_->record_round(total);
}

}  // namespace adaptive_submod
