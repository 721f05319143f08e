#pragma once
#include <cstdint>

namespace ballmetric {

/// SplitMix64: the seeded generator behind every random draw. Integer-only
/// state; sequences are bit-identical across platforms and runs.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed = 0) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

private:
    uint64_t state_;
};

/// Independent stream derived from (seed, index) pairs.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
    SplitMix64 g(seed ^ (0xD1B54A32D192ED03ull + index * 0x9E3779B97F4A7C15ull));
    return g.next_u64();
}

} // namespace ballmetric
