#pragma once

#include <cstdint>
#include <random>

#include "supint/scalar.hpp"

namespace supint {

/// Seeded, platform-stable sampling.  Uniform doubles are derived from the
/// raw 64-bit stream directly (std::uniform_real_distribution is
/// implementation-defined and would break byte-stable reports).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return double(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Complex sample in the square [lo,hi] x i[lo,hi].
    Scalar box(double lo, double hi) {
        const double re = uniform(lo, hi);
        const double im = uniform(lo, hi);
        return {re, im};
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace supint
