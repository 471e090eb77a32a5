#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace homodigraph {

// Worker cap: HOMODIGRAPH_THREADS when set to a positive integer, else the
// hardware concurrency, else 1.
inline int thread_cap() {
    if (const char* env = std::getenv("HOMODIGRAPH_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for every i in [0, n). Work is handed out dynamically, so fn
// must write only to per-index slots for the outcome to be deterministic.
inline void parallel_for(long long n, const std::function<void(long long)>& fn) {
    const int workers = thread_cap();
    if (workers <= 1 || n <= 1) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    auto run = [&] {
        for (long long i; (i = next.fetch_add(1)) < n;) fn(i);
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

}  // namespace homodigraph
