#ifndef QSTAB_PARALLEL_HPP
#define QSTAB_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace qstab {

/// Worker count: QSTAB_THREADS env var if set and > 0, otherwise the
/// hardware concurrency (min 1).
int thread_budget();

/// Runs fn(i) for i in [0, n). Work items must be independent; callers get
/// determinism by writing results into slot i and reducing in index order
/// afterwards. Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace qstab

#endif
