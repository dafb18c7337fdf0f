#pragma once

// Deterministic fan-out: tasks are indexed, results land in their own slot, and callers
// reduce the slots in index order. Output never depends on scheduling or worker count.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace kostant {

/// Worker count from CENSUS_WORKERS, falling back to the hardware concurrency.
inline int default_workers() {
  if (const char* env = std::getenv("CENSUS_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

template <class Result, class Task>
std::vector<Result> parallel_map(std::size_t task_count, int workers, Task&& task) {
  std::vector<Result> results(task_count);
  const auto threads = static_cast<std::size_t>(std::clamp<long>(workers, 1, static_cast<long>(std::max<std::size_t>(task_count, 1))));
  if (threads <= 1) {
    for (std::size_t i = 0; i < task_count; ++i) results[i] = task(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < task_count; i = next++) {
        try {
          results[i] = task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace kostant
