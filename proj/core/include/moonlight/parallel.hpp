#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace moonlight {

/// Worker count from MOONLIGHT_THREADS; 0 or unset means hardware concurrency.
unsigned default_worker_count();

/// Runs fn(i) for i in [0, n) on up to `workers` threads (0 = default).
/// Work is split into contiguous chunks; the first exception is rethrown
/// after all workers finish.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, unsigned workers = 0) {
  if (workers == 0) workers = default_worker_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t count = std::min<std::size_t>(workers, n);
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(count);
  for (std::size_t w = 0; w < count; ++w) {
    const std::size_t begin = n * w / count;
    const std::size_t end = n * (w + 1) / count;
    threads.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace moonlight
