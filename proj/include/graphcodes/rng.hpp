#pragma once

#include <cstdint>

namespace graphcodes {

/// SplitMix64: the fixed generator behind every randomized construction.
/// All randomness in the library flows through instances seeded from a
/// user-supplied 64-bit seed, so identical seeds reproduce identical codes
/// on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound > 0, by rejection.
    uint64_t below(uint64_t bound) {
        const uint64_t limit = bound * (UINT64_MAX / bound);
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    int bit() { return int(next() >> 63); }

private:
    uint64_t state_;
};

}  // namespace graphcodes
