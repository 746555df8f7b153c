#pragma once

#include <cstddef>
#include <functional>

namespace bhlab {

// Worker count: BHLAB_THREADS if set (clamped to >= 1), otherwise the
// hardware concurrency.
int thread_budget();

// Runs f(i) for i in [0, n) on the worker pool. Each i must write only
// its own preallocated slot; no ordering is imposed, so callers that sum
// results gather them first and reduce deterministically.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace bhlab
