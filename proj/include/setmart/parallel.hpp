#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace setmart {

/// Worker count: hardware concurrency, capped by SETMART_THREADS when set.
std::size_t worker_count();

/// Runs fn(i) for i in [0, n) across worker threads. Results must be written
/// to per-index slots. If any call throws, the exception of the lowest failing
/// index is rethrown, so failures are schedule-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace setmart
