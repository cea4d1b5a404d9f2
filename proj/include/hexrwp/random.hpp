#pragma once

#include <cstdint>
#include <random>

namespace hexrwp {

/// Stream identifiers used to split one user seed into independent generators.
enum class Stream : std::uint64_t {
    Waypoints = 1,
    Speeds = 2,
    Baseline = 3,
    Oracle = 4,
};

/// SplitMix64 finalizer; used to derive sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded 64-bit Mersenne Twister with a fixed bits-to-double mapping, so a
/// seed reproduces the same draws on every standard library.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}
    RandomSource(std::uint64_t seed, Stream stream)
        : engine_(mix_seed(seed, static_cast<std::uint64_t>(stream))) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace hexrwp
