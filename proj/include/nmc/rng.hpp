#pragma once

#include <cstdint>

namespace nmc {

// splitmix64 step; the basis for all seed derivation in the project.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive an independent stream seed from (seed, index). Counter-based so
// that work partitioned by index is identical however it is scheduled.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
    uint64_t s = seed;
    uint64_t a = splitmix64(s);
    s = a ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return splitmix64(s);
}

// Per-index deterministic draw stream.
struct SampleRng {
    uint64_t state;
    SampleRng(uint64_t seed, uint64_t index) : state(mix_seed(seed, index)) {}

    uint64_t next() { return splitmix64(state); }

    // Uniform value in [0, 2^bits); bits <= 64. Power-of-two ranges only,
    // so there is no modulo bias anywhere.
    uint64_t next_bits(uint32_t bits) {
        if (bits == 0) return 0;
        return next() >> (64 - bits);
    }
};

}  // namespace nmc
