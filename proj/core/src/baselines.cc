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

#include "adaptive_submod/baselines.h"

#include <algorithm>
#include <queue>
#include <vector>

#include "adaptive_submod/errors.h"

namespace adaptive_submod {
namespace {

void check_k(const OracleHandle& oracle, std::size_t k) {
  if (k > oracle.ground_size()) {
    throw InvalidInputError("cardinality budget k exceeds the ground set size");
  }
}

double single_query(const OracleHandle& oracle, std::span<const ElementId> base) {
  double v = 0.0;
  oracle.run_round(base, 1, [&](std::size_t, QueryContext& ctx) {
    v = ctx.extend(std::span<const ElementId>());
    ctx.rewind();
  });
  return v;
}

// Advances `comb` (strictly increasing, values < n) to the next combination of
// the same size in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<ElementId>& comb, std::size_t n) {
  const std::size_t s = comb.size();
  for (std::size_t i = s; i-- > 0;) {
    if (comb[i] + (s - i) < n) {
      ++comb[i];
      for (std::size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

BaselineResult greedy(const OracleHandle& oracle, std::size_t k) {
  check_k(oracle, k);
  const std::size_t n = oracle.ground_size();
  BaselineResult out;
  if (k == 0) {
    out.value = single_query(oracle, {});
    return out;
  }
  std::vector<ElementId> solution;
  std::vector<char> taken(n, 0);
  std::vector<ElementId> pool;
  std::vector<double> values;
  for (std::size_t step = 0; step < k; ++step) {
    pool.clear();
    for (std::size_t x = 0; x < n; ++x) {
      if (!taken[x]) pool.push_back(static_cast<ElementId>(x));
    }
    values.assign(pool.size(), 0.0);
    oracle.run_round(solution, pool.size(), [&](std::size_t i, QueryContext& ctx) {
      values[i] = ctx.extend(pool[i]);
      ctx.rewind();
    });
    const double base = step == 0 ? 0.0 : out.value;
    std::size_t best = 0;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (values[i] - base > values[best] - base) best = i;
    }
    solution.push_back(pool[best]);
    taken[pool[best]] = 1;
    out.value = values[best];
  }
  out.solution = SubsetSelection(std::move(solution));
  return out;
}

BaselineResult lazy_greedy(const OracleHandle& oracle, std::size_t k) {
  check_k(oracle, k);
  const std::size_t n = oracle.ground_size();
  BaselineResult out;
  if (k == 0) {
    out.value = single_query(oracle, {});
    return out;
  }
  struct Entry {
    double key;
    double value;   // f(S u {x}) when the key was computed
    ElementId id;
    std::size_t step;
  };
  auto worse = [](const Entry& a, const Entry& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.id > b.id;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);

  std::vector<double> first(n);
  oracle.run_round({}, n, [&](std::size_t i, QueryContext& ctx) {
    first[i] = ctx.extend(static_cast<ElementId>(i));
    ctx.rewind();
  });
  for (std::size_t i = 0; i < n; ++i) {
    queue.push({first[i], first[i], static_cast<ElementId>(i), 0});
  }

  std::vector<ElementId> solution;
  for (std::size_t step = 0; step < k; ++step) {
    while (true) {
      Entry top = queue.top();
      queue.pop();
      if (top.step == step) {
        solution.push_back(top.id);
        out.value = top.value;
        break;
      }
      double grown = 0.0;
      oracle.run_round(solution, 1, [&](std::size_t, QueryContext& ctx) {
        grown = ctx.extend(top.id);
        ctx.rewind();
      });
      queue.push({grown - out.value, grown, top.id, step});
    }
  }
  out.solution = SubsetSelection(std::move(solution));
  return out;
}

std::uint64_t count_subsets_up_to(std::size_t n, std::size_t k, std::uint64_t limit) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, j)
  for (std::size_t j = 0; j <= std::min(n, k); ++j) {
    if (j > 0) {
      // C(n, j) = C(n, j-1) (n - j + 1) / j, exact in this order; binom stays
      // below the limit so the product fits.
      binom = binom * (n - j + 1) / j;
      if (binom > limit) return limit + 1;
    }
    total += binom;
    if (total > limit) return limit + 1;
  }
  return total;
}

BruteForceResult brute_force_max(const OracleHandle& oracle, std::size_t k) {
  const std::size_t n = oracle.ground_size();
  k = std::min(k, n);
  if (count_subsets_up_to(n, k) > kBruteForceLimit) {
    throw TooLargeError("brute force would enumerate more than 1e6 subsets");
  }
  // Shard 0 is the empty set; shard i + 1 holds every subset whose minimum is
  // i, visited in lexicographic order.
  struct Best {
    std::vector<ElementId> set;
    double value = 0.0;
    bool seen = false;
  };
  std::vector<Best> shards(n + 1);
  oracle.run_round({}, n + 1, [&](std::size_t shard, QueryContext& ctx) {
    Best& best = shards[shard];
    auto offer = [&](std::span<const ElementId> s) {
      const double v = ctx.extend(s);
      ctx.rewind();
      if (!best.seen || v > best.value) {
        best.seen = true;
        best.value = v;
        best.set.assign(s.begin(), s.end());
      }
    };
    if (shard == 0) {
      offer({});
      return;
    }
    if (k == 0) return;
    std::vector<ElementId> cur{static_cast<ElementId>(shard - 1)};
    while (true) {
      offer(cur);
      if (cur.size() < k && cur.back() + 1 < n) {
        cur.push_back(cur.back() + 1);
        continue;
      }
      while (cur.size() > 1 && cur.back() + 1 >= n) cur.pop_back();
      if (cur.size() == 1) break;
      ++cur.back();
    }
  });
  BruteForceResult out;
  bool have = false;
  for (const Best& b : shards) {
    if (b.seen && (!have || b.value > out.best_value)) {
      have = true;
      out.best_value = b.value;
      out.best_set = SubsetSelection(b.set);
    }
  }
  return out;
}

BruteForceResult brute_force_cover(const OracleHandle& oracle, double target) {
  const std::size_t n = oracle.ground_size();
  if (n >= 64 || (std::uint64_t{1} << n) > kBruteForceLimit) {
    throw TooLargeError("brute force cover would enumerate more than 1e6 subsets");
  }
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<ElementId> flat;
    std::vector<ElementId> comb(size);
    for (std::size_t i = 0; i < size; ++i) comb[i] = static_cast<ElementId>(i);
    do {
      flat.insert(flat.end(), comb.begin(), comb.end());
    } while (next_combination(comb, n));
    const std::size_t count = size == 0 ? 1 : flat.size() / size;
    std::vector<double> values(count);
    oracle.run_round({}, count, [&](std::size_t i, QueryContext& ctx) {
      values[i] = ctx.extend(std::span<const ElementId>(flat.data() + i * size, size));
      ctx.rewind();
    });
    for (std::size_t i = 0; i < count; ++i) {
      if (values[i] >= target) {
        std::span<const ElementId> s(flat.data() + i * size, size);
        return {SubsetSelection(std::vector<ElementId>(s.begin(), s.end())), values[i]};
      }
    }
  }
  throw InfeasibleTargetError("no subset reaches the cover target");
}

}  // namespace adaptive_submod
