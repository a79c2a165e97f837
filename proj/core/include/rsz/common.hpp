#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rsz {

using cplx = std::complex<double>;

/// Comparison tolerances. Relative tolerance applies to the larger magnitude.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;

    bool close(cplx a, cplx b) const {
        const double scale = std::max(std::abs(a), std::abs(b));
        return std::abs(a - b) <= abs + rel * scale;
    }
};

/// Thrown when an input violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a local factor is evaluated too close to a pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

const char* version();

}  // namespace rsz
