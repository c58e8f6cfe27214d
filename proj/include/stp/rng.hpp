#pragma once

#include <cstdint>

namespace stp {

// splitmix64; self-contained so seeded runs reproduce byte-identically
// across standard libraries.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in {0, ..., n-1}; n > 0.
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

    // Uniform in {lo, ..., hi} inclusive.
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
};

}  // namespace stp
