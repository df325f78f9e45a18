// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace evograph {

// Default engine parallelism: EVOGRAPH_THREADS when set, otherwise the
// hardware concurrency.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("EVOGRAPH_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

inline unsigned resolve_threads(unsigned requested) {
  return requested == 0 ? default_thread_count() : requested;
}

// Runs fn(lo, hi, worker_index) over contiguous chunks of [0, n). The caller
// owns cross-chunk synchronization; chunks never overlap. Falls back to a
// single inline call for one thread or small n.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
  if (n == 0) return;
  std::size_t workers = std::min<std::size_t>(threads == 0 ? 1 : threads, n);
  if (workers <= 1) {
    fn(std::size_t{0}, n, 0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    std::size_t lo = w * chunk;
    if (lo >= n) break;
    std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&fn, lo, hi, w] { fn(lo, hi, static_cast<unsigned>(w)); });
  }
  fn(std::size_t{0}, std::min(n, chunk), 0u);
  for (std::thread& t : pool) t.join();
}

}  // namespace evograph
