#pragma once

#include <functional>

namespace iclcbf {

// 0 means "use the hardware concurrency".
int resolve_workers(int requested);

// Runs fn(i) for i in [0, count) across `workers` threads. Callers write
// results into per-index slots, so the outcome is independent of scheduling.
// The first exception thrown by any worker is rethrown after the join.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

}  // namespace iclcbf
