#ifndef EVOCHAIN_RNG_HPP
#define EVOCHAIN_RNG_HPP

#include <cstdint>

namespace evochain {

/// Output scrambler of the SplitMix64 generator (Steele, Lea & Flood 2014).
/// Also used on its own as the seed-mixing function, so one documented
/// algorithm covers both roles. This generator is pinned: changing it would
/// silently invalidate every recorded simulation output.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// SplitMix64: 64-bit state advanced by the golden-gamma constant, output
/// scrambled by mix64. Passes through identical sequences for identical
/// seeds on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits of next().
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Per-stream seed for stream (a, b) under a master seed:
/// mix64(mix64(mix64(seed) ^ a) ^ b).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(mix64(seed) ^ a) ^ b);
}

}  // namespace evochain

#endif
