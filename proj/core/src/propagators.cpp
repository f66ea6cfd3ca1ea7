#include "hfk/propagators.hpp"

#include <cmath>

namespace hfk {

namespace {

void require_time(double t) {
    if (!(t > 0.0))
        throw std::invalid_argument("free_propagator: t must be > 0");
}

} // namespace

Complex free_propagator_1d(double dx, double t, const PhysicalConstants& pc) {
    require_time(t);
    double a = pc.mass / (2.0 * pi * pc.hbar * t);
    double mod = std::sqrt(a);
    double phase = pc.mass * dx * dx / (2.0 * pc.hbar * t) - 0.25 * pi;
    return std::polar(mod, phase);
}

Complex free_propagator_2d(double dx, double dy, double t, const PhysicalConstants& pc) {
    require_time(t);
    double a = pc.mass / (2.0 * pi * pc.hbar * t);
    double phase = pc.mass * (dx * dx + dy * dy) / (2.0 * pc.hbar * t) - 0.5 * pi;
    return std::polar(a, phase);
}

Complex free_propagator(std::span<const double> dq, double t,
                        const PhysicalConstants& pc) {
    if (dq.size() == 1) return free_propagator_1d(dq[0], t, pc);
    if (dq.size() == 2) return free_propagator_2d(dq[0], dq[1], t, pc);
    throw std::invalid_argument("free_propagator: dimension must be 1 or 2");
}

Complex free_propagator_displaced(Complex dx, double t, const PhysicalConstants& pc) {
    require_time(t);
    double a = pc.mass / (2.0 * pi * pc.hbar * t);
    Complex pref = std::sqrt(a) * std::polar(1.0, -0.25 * pi);
    Complex expo = Complex(0.0, pc.mass / (2.0 * pc.hbar * t)) * dx * dx;
    return pref * std::exp(expo);
}

} // namespace hfk
