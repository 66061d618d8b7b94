#pragma once

#include <cstdint>

namespace penreg {

/// splitmix64 generator (Steele, Lea, Flood 2014). Deterministic across
/// platforms, so every randomized matrix and test failure is reproducible
/// from its seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). Modulo bias is negligible for the small
    /// bounds used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Uniform in [lo, hi], inclusive.
    std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

} // namespace penreg
