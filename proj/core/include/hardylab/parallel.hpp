#pragma once

#include <cstddef>
#include <functional>

namespace hardylab {

/// Runs fn(0..n-1) on up to `threads` workers (0: hardware concurrency).
/// Callers write into preallocated slots, so results do not depend on
/// scheduling. The first exception thrown by any task is rethrown.
void parallel_for(size_t n, const std::function<void(size_t)>& fn, unsigned threads = 0);

}  // namespace hardylab
