#pragma once

#include <cstdint>

namespace largesets {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937 because
/// the algorithm is a dozen lines and trivially portable across languages,
/// which keeps seeded corpora reproducible outside this codebase. The
/// report header names it.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound > 0. Modulo bias is irrelevant at
    /// test-corpus bounds (< 2^32).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int range(int lo, int hi_inclusive) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    /// Decorrelated stream for trial `i` of a seeded run.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t i) {
        SplitMix64 mix(seed ^ (0xA0761D6478BD642FULL + i));
        mix.next();
        return mix;
    }

    static constexpr const char* algorithm_id = "splitmix64";

private:
    std::uint64_t state_;
};

}  // namespace largesets
