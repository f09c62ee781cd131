#pragma once

// Deterministic budgeted map over independent work items.
//
// Items are processed in fixed-size chunks. Within a chunk every item gets a
// private Budget equal to what was left at the start of the chunk; after the
// chunk the costs are added up in item order. The first item that overruns
// ends the run. Chunk size does not depend on the thread count, so the set of
// completed items, their values and the reported node count are identical for
// any number of threads.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "cvxtop/budget.hpp"

namespace cvxtop::detail {

inline constexpr std::size_t kChunkSize = 64;

template <typename R>
struct OrderedRun {
  std::vector<R> values;  // results for the completed prefix of items
  bool complete = false;
  std::uint64_t nodes = 0;
};

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  const auto n = std::min<std::size_t>(threads, count);
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

/// `fn(i, budget)` returns the value for item i, or std::nullopt if it ran
/// out of budget. `already_spent` is charged before the first item.
template <typename R, typename Fn>
OrderedRun<R> run_ordered(std::size_t count, const SearchOptions& opts, std::uint64_t already_spent,
                          Fn&& fn) {
  OrderedRun<R> run;
  run.nodes = already_spent;
  if (already_spent > opts.budget) return run;
  run.values.reserve(count);
  for (std::size_t start = 0; start < count; start += kChunkSize) {
    const std::size_t stop = std::min(count, start + kChunkSize);
    const std::uint64_t left = opts.budget - run.nodes;
    std::vector<std::optional<R>> slot(stop - start);
    std::vector<std::uint64_t> cost(stop - start, 0);
    parallel_for(stop - start, opts.threads, [&](std::size_t j) {
      Budget b(left);
      slot[j] = fn(start + j, b);
      cost[j] = b.used();
    });
    for (std::size_t j = 0; j < slot.size(); ++j) {
      run.nodes += cost[j];
      if (!slot[j] || run.nodes > opts.budget) return run;
      run.values.push_back(std::move(*slot[j]));
    }
  }
  run.complete = true;
  return run;
}

}  // namespace cvxtop::detail
