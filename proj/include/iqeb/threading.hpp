#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace iqeb {

/// Run fn(i) for i in [0, n) across up to max_threads workers in contiguous
/// chunks.  Each index writes only its own output slot, so results are
/// identical for any thread count.  The first worker exception is rethrown
/// in the caller after all workers join.
inline void parallel_for(std::size_t n, int max_threads,
                         const std::function<void(std::size_t)>& fn) {
  const int workers = std::max(
      1, std::min<int>(max_threads, static_cast<int>(
                                        std::thread::hardware_concurrency())));
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace iqeb
