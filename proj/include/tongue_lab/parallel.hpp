#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "tongue_lab/errors.hpp"

namespace tongue_lab {

/// Thread count from TONGUE_LAB_THREADS, or `fallback` when unset.
inline unsigned default_threads(unsigned fallback = 1) {
  const char* env = std::getenv("TONGUE_LAB_THREADS");
  if (env == nullptr || *env == '\0') {
    return std::max(1u, fallback);
  }
  try {
    std::size_t used = 0;
    const long value = std::stol(env, &used);
    if (used != std::string(env).size() || value < 1) {
      throw ConfigError("TONGUE_LAB_THREADS must be a positive integer");
    }
    return static_cast<unsigned>(value);
  } catch (const std::logic_error&) {
    throw ConfigError("TONGUE_LAB_THREADS must be a positive integer");
  }
}

inline unsigned hardware_threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for every i in [0, count) on up to `threads` workers.
///
/// Work is handed out one index at a time. If any call throws, remaining
/// indices are abandoned and the exception from the smallest failing index
/// is rethrown, so the reported error does not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (count == 0) return;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex failure_mutex;
  std::size_t failure_index = count;
  std::exception_ptr failure;

  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (i < failure_index) {
          failure_index = i;
          failure = std::current_exception();
        }
        stop.store(true, std::memory_order_relaxed);
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

} // namespace tongue_lab
