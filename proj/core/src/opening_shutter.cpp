#include "hfk/opening_shutter.hpp"

#include <cmath>

#include "hfk/propagators.hpp"

namespace hfk {

ComplexDrift opening_shutter_drift(double xp, double x1, double tau,
                                   const PhysicalConstants& pc) {
    pc.validate();
    if (!(tau >= 0.0))
        throw std::domain_error("opening_shutter: tau must be >= 0");
    double l = x1 - xp;
    double g = 2.0 * pc.hbar * tau / pc.mass;
    ComplexDrift d;
    d.rho = std::sqrt(std::hypot(l * l, g));
    d.theta = 0.5 * std::atan2(g, l * l);
    d.x_tilde = Complex(x1, 0.0) - std::polar(d.rho, d.theta);
    return d;
}

Complex opening_shutter_propagator(double x, double xp, double t, double x1,
                                   double tau, const PhysicalConstants& pc) {
    if (!(xp < x1 && x1 < x))
        throw std::domain_error("opening_shutter: need xp < x1 < x");
    if (!(t > 0.0))
        throw std::domain_error("opening_shutter: need t > 0");
    if (tau == 0.0) return free_propagator_1d(x - xp, t, pc);

    ComplexDrift d = opening_shutter_drift(xp, x1, tau, pc);
    Complex gap = std::polar(d.rho, d.theta); // x1 - x_tilde, by construction
    Complex transmission = 0.5 * (1.0 + (x1 - xp) / gap);
    Complex dx = Complex(x - x1, 0.0) + gap;
    return transmission * free_propagator_displaced(dx, t, pc);
}

} // namespace hfk
