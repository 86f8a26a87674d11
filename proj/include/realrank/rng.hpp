#pragma once

#include <cstdint>

#include "realrank/rational.hpp"

namespace realrank {

/// SplitMix64. Used everywhere randomness is needed so that seeded runs are
/// reproducible across platforms and thread schedules (streams are split per
/// trial index, never shared).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent stream for trial `index` of a seeded experiment.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next();
        return mix;
    }

    /// Uniform integer in [lo, hi], inclusive. Rejection-free modulo bias is
    /// irrelevant at the lattice sizes used here but we reject anyway.
    long int_in(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("SplitMix64::int_in: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    /// Nonzero integer in [-n, n].
    long nonzero_int(long n) {
        long v;
        do { v = int_in(-n, n); } while (v == 0);
        return v;
    }

    /// Rational from the integer lattice [-n, n], denominator 1.
    Rational lattice_rational(long n) { return Rational(int_in(-n, n)); }

private:
    std::uint64_t state_;
};

}  // namespace realrank
