// Minimal task dispatch for the embarrassingly parallel sweeps.
// LLC_ENTROPY_THREADS caps the worker count; 1 forces serial execution.

#pragma once

#include <functional>

namespace llcent {

int thread_budget();

// Runs fn(0..n-1), possibly concurrently. fn must be safe to run on distinct
// indices in parallel; results should go to preallocated slots.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace llcent
