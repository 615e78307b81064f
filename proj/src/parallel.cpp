#include "qstab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qstab {

int thread_budget() {
  if (const char* env = std::getenv("QSTAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
  if (n <= 0) return;
  const int workers = static_cast<int>(
      std::min<std::int64_t>(thread_budget(), n));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }

  // Dynamic block scheduling; item -> result mapping stays index-based so
  // the partitioning cannot affect outputs.
  constexpr std::int64_t kBlock = 256;
  std::atomic<std::int64_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;

  auto work = [&] {
    for (;;) {
      const std::int64_t begin = next.fetch_add(kBlock);
      if (begin >= n) return;
      const std::int64_t end = std::min(begin + kBlock, n);
      try {
        for (std::int64_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qstab
