#include "kchrom/parallel.hpp"

#include <algorithm>
#include <thread>

namespace kchrom {

int resolve_workers(int requested) {
    if (requested == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(hw) : 1;
    }
    return std::clamp(requested, 1, 256);
}

void run_sharded(int workers, const std::function<void(int)>& fn) {
    if (workers <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back(fn, w);
    for (auto& t : pool)
        t.join();
}

} // namespace kchrom
