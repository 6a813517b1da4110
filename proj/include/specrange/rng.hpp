#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace specrange {

// SplitMix64 (Steele, Lea, Flood 2014). Every random draw in the library goes
// through this generator and the transforms below, so seeded output is
// bit-identical across platforms and standard libraries.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer on [0, bound).
    std::uint64_t below(std::uint64_t bound) noexcept { return bound == 0 ? 0 : next() % bound; }

    /// Standard normal via Box-Muller; the second variate is discarded.
    double gaussian() noexcept {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Complex normal with independent standard real and imaginary parts.
    std::complex<double> complex_gaussian() noexcept {
        const double re = gaussian();
        return {re, gaussian()};
    }

    bool coin() noexcept { return (next() >> 63) != 0; }

   private:
    std::uint64_t state_;
};

/// Derive an independent stream for sub-task `index` of a seeded run.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 g(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    return g.next();
}

}  // namespace specrange
