#pragma once

#include <cstddef>
#include <functional>

namespace hsqm {

/// Worker count: HSQM_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
int worker_count();

/// Runs body(i) for i in [0, n) over contiguous chunks. Each index is
/// visited exactly once by one worker, so writes to per-index slots are
/// deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hsqm
