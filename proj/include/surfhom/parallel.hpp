#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace surfhom {

// Thread budget: explicit argument wins, then SURFHOM_THREADS, then 1.
inline int thread_budget(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SURFHOM_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

// Static partition of [0, n); results must be reduced order-independently
// (max residuals and the like) so reports stay byte-stable.
inline void parallel_for(long n, int threads, const std::function<void(long, long)>& body) {
    threads = std::min<long>(std::max(threads, 1), std::max<long>(n, 1));
    if (threads <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    long chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([=, &body] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace surfhom
