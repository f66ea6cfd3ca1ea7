#pragma once
#include <complex>
#include <stdexcept>
#include <string>

namespace hfk {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr const char* version = "1.0.0";

// Atomic units by default; every physics operation takes these explicitly.
struct PhysicalConstants {
    double mass = 1.0;
    double hbar = 1.0;

    void validate() const {
        if (!(mass > 0.0) || !(hbar > 0.0))
            throw std::invalid_argument("PhysicalConstants: mass and hbar must be > 0");
    }
};

// Raised by the thin wrappers when quadrature could not reach the requested
// tolerances. The best available estimate travels with the exception.
class ToleranceNotMet : public std::runtime_error {
public:
    ToleranceNotMet(const std::string& what, Complex best, double err)
        : std::runtime_error(what), best_estimate(best), err_estimate(err) {}
    Complex best_estimate;
    double err_estimate;
};

} // namespace hfk
