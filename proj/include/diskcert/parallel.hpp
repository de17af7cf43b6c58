#ifndef DISKCERT_PARALLEL_HPP
#define DISKCERT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace diskcert {

/// Worker count: DISK_CERT_JOBS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
inline unsigned worker_count() {
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DISK_CERT_JOBS")) {
    try {
      const long requested = std::stol(env);
      if (requested > 0) jobs = static_cast<unsigned>(requested);
    } catch (const std::exception&) {
      // Unparsable values fall back to the default.
    }
  }
  return jobs;
}

/// Runs fn(i) for i in [0, n). Results must be written to per-index slots, so
/// the outcome is independent of scheduling. The first exception is rethrown.
template <typename Fn>
void parallel_for_index(std::size_t n, Fn&& fn) {
  const unsigned jobs = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace diskcert

#endif  // DISKCERT_PARALLEL_HPP
