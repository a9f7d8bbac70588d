#pragma once

#include <cstdint>

namespace betaforge {

// splitmix64. One master seed feeds every randomized search; shard seeds are
// derived with derive_seed so parallel shards stay reproducible.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // in [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

inline uint64_t derive_seed(uint64_t master, uint64_t shard) {
    SplitMix64 g(master ^ (0x2545f4914f6cdd1dULL * (shard + 1)));
    g.next();
    return g.next();
}

// Seed-stable hash of an integer sequence, for per-vertex derived randomness.
inline uint64_t mix_sequence(uint64_t seed, const int32_t* data, size_t n) {
    SplitMix64 g(seed ^ 0x9e3779b97f4a7c15ULL);
    uint64_t h = g.next();
    for (size_t i = 0; i < n; ++i) {
        h ^= static_cast<uint64_t>(static_cast<uint32_t>(data[i])) + 0x9e3779b97f4a7c15ULL +
             (h << 6) + (h >> 2);
        SplitMix64 s(h);
        h = s.next();
    }
    return h;
}

}  // namespace betaforge
