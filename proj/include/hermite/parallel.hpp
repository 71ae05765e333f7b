#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hermite {

// Thread cap: HERMITE_LAB_THREADS if set, otherwise hardware concurrency.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("HERMITE_LAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, n). Each index is processed exactly once and
// writes must target disjoint slots, so the result does not depend on the
// thread count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned threads = thread_cap();
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace hermite
