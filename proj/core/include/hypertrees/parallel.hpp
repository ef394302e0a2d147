#pragma once

#include <cstddef>
#include <functional>

namespace hypertrees {

/// Worker cap: HYPERTREE_THREADS when set (>= 1), else the hardware
/// concurrency.
unsigned thread_budget();

/// Runs fn(0..count-1) across the thread budget. Results must be written
/// to per-index slots so the outcome is identical at any thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hypertrees
