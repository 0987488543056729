#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace kchrom {

// 0 means "ask the hardware"; anything else is clamped to [1, 256].
int resolve_workers(int requested);

// Runs fn(worker_id) on `workers` threads (inline when workers == 1) and
// joins. Work must be split by static round robin on item index so results
// are independent of the worker count.
void run_sharded(int workers, const std::function<void(int)>& fn);

// True when index i belongs to worker w under round-robin sharding.
inline bool owns(std::size_t i, int w, int workers) {
    return static_cast<int>(i % static_cast<std::size_t>(workers)) == w;
}

} // namespace kchrom
