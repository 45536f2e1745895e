#pragma once

#include <cstdint>

#include "conegeo/rational.hpp"

namespace conegeo {

/* splitmix64 mixing function. Streams are derived from (seed, trial) pairs
 * by mixing, so trial k of a run is reproducible without generating trials
 * 0..k-1 first; reports quote the seed and are byte-identical across runs. */
inline uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(mix64(seed)) {}
    Rng(uint64_t seed, uint64_t stream) : state(mix64(mix64(seed) ^ mix64(~stream))) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    /* Uniform in [lo, hi], inclusive. Ranges here are tiny, so the modulo
     * bias is irrelevant next to determinism. */
    long uniform(long lo, long hi) {
        return lo + (long)(next() % (uint64_t)(hi - lo + 1));
    }

    /* Integer-valued rational entry in [lo, hi]. */
    Rat int_entry(long lo, long hi) { return Rat(uniform(lo, hi)); }

    /* Rational entry n/d with n in [lo*d, hi*d] for a random d in
     * [1, maxden]; stays inside [lo, hi]. */
    Rat rat_entry(long lo, long hi, long maxden) {
        long d = uniform(1, maxden);
        return rat(uniform(lo * d, hi * d), d);
    }
};

}  // namespace conegeo
