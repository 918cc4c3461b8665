#pragma once

#include <cstdint>
#include <random>

namespace cohort {

/// Seeded stream of uniform draws. One instance per run; never shared.
///
/// The conversions below are spelled out rather than delegated to the
/// <random> distributions, whose output is implementation-defined, so that a
/// seed reproduces the same run on every standard library.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] (inclusive), unbiased.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
        if (span == 0)  // full 64-bit range
            return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % span + 1u) % span;
        std::uint64_t r = engine_();
        while (r > limit)
            r = engine_();
        return lo + static_cast<std::int64_t>(r % span);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cohort
