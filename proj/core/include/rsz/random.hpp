#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <cstdint>
#include <random>

namespace rsz {

/// Seeded generator with platform-independent derived distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
    /// Uniform integer in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    std::complex<double> unit_circle() {
        const double t = uniform(0.0, 2.0 * std::numbers::pi);
        return {std::cos(t), std::sin(t)};
    }
    /// Uniform point in the closed disc of the given radius.
    std::complex<double> disc(double radius) {
        return std::sqrt(uniform()) * radius * unit_circle();
    }
    double normal() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace rsz
