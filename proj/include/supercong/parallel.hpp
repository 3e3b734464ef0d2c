#ifndef SUPERCONG_PARALLEL_HPP
#define SUPERCONG_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace supercong {

/// Runs fn(0..count-1) across up to `jobs` threads pulling from a shared
/// index. Results must be written to preallocated, index-owned slots so the
/// outcome is independent of scheduling. `progress`, when given, is bumped
/// once per completed item. The first exception is rethrown after all
/// threads join.
inline void parallel_for(std::size_t count, int jobs,
                         std::atomic<std::size_t>* progress,
                         const std::function<void(std::size_t)>& fn) {
  auto bump = [&] {
    if (progress) progress->fetch_add(1, std::memory_order_relaxed);
  };
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
      bump();
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
        bump();
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (std::size_t w = 0; w < n_threads; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t)>& fn) {
  parallel_for(count, jobs, nullptr, fn);
}

}  // namespace supercong

#endif
