// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random stream. Identical seed => identical sample sequence.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace litstar {

/// Seeded random stream backed by the 64-bit Mersenne Twister (mt19937_64,
/// a twisted generalized feedback shift register fixed by the C++ standard).
/// All distributions are derived from raw 64-bit draws in-house so the
/// sequence is bit-reproducible for a given seed, independent of the
/// standard library's distribution implementations.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed = 0) : seed_(seed), gen_(seed) {}

    [[nodiscard]] std::uint64_t seed() const { return seed_; }

    std::uint64_t nextRaw() { return gen_(); }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t uniformInt(std::uint64_t n) {
        // Rejection against the largest multiple of n to avoid modulo bias.
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    /// Standard normal deviate via Box-Muller (one spare cached).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// Derive an independent stream for a labeled sub-task (splitmix64 mix).
    [[nodiscard]] RngStream fork(std::uint64_t label) const {
        std::uint64_t z = seed_ + 0x9E3779B97F4A7C15ULL * (label + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return RngStream(z ^ (z >> 31));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace litstar
