#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace bvpdn {

/// Worker count: BVPDN_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads using a static
/// contiguous partition. Each index is handled by exactly one worker, so
/// results written per index are independent of the thread count. The first
/// exception thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace bvpdn
