#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace warpfuse {

// Worker count resolution: explicit set_thread_count() wins, then the
// WARPFUSE_THREADS environment variable, then hardware concurrency.
//
// Every parallel loop in this library writes disjoint output ranges and
// combines any floating-point partials in a fixed order, so results are
// bit-identical for every thread count.

inline int& thread_count_override() {
  static int count = 0;  // 0 = auto
  return count;
}

inline void set_thread_count(int n) { thread_count_override() = n; }

inline int thread_count() {
  if (thread_count_override() > 0) return thread_count_override();
  if (const char* env = std::getenv("WARPFUSE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [begin, end). Work is handed out index-by-index via an
// atomic cursor; fn must not touch state owned by another index.
inline void parallel_for(std::int64_t begin, std::int64_t end,
                         const std::function<void(std::int64_t)>& fn) {
  const std::int64_t total = end - begin;
  if (total <= 0) return;
  const int workers = std::min<std::int64_t>(thread_count(), total);
  if (workers <= 1) {
    for (std::int64_t i = begin; i < end; ++i) fn(i);
    return;
  }

  std::atomic<std::int64_t> cursor{begin};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::int64_t i = cursor.fetch_add(1, std::memory_order_relaxed);
        if (i >= end || failed.load(std::memory_order_relaxed)) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Pattern for deterministic reductions: one partial per index, combined
// sequentially after the parallel phase.
template <typename T>
T parallel_sum(std::int64_t begin, std::int64_t end,
               const std::function<T(std::int64_t)>& fn) {
  std::vector<T> partials(static_cast<std::size_t>(end - begin), T{});
  parallel_for(begin, end, [&](std::int64_t i) { partials[static_cast<std::size_t>(i - begin)] = fn(i); });
  T total{};
  for (const T& p : partials) total += p;
  return total;
}

}  // namespace warpfuse
