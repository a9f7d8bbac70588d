#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace betaforge {

inline unsigned effective_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Splits [0, n) into contiguous chunks, one worker per chunk. Workers write
// only to per-chunk state; the caller merges by chunk index so the result is
// independent of scheduling.
template <typename Fn>  // void fn(size_t begin, size_t end, unsigned chunk)
void parallel_chunks(size_t n, unsigned threads, Fn&& fn) {
    size_t workers = std::min<size_t>(effective_threads(threads), std::max<size_t>(n, 1));
    if (workers <= 1 || n == 0) {
        fn(0, n, 0);
        return;
    }
    size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t c = 0; c < workers; ++c) {
        size_t b = c * chunk;
        size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([b, e, c, &fn] { fn(b, e, static_cast<unsigned>(c)); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace betaforge
