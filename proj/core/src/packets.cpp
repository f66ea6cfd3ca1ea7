#include "hfk/packets.hpp"

#include <cmath>

namespace hfk {

FreeEvolutionFactors free_factors(const GaussianPacket1D& p, double t,
                                  const PhysicalConstants& pc) {
    FreeEvolutionFactors f;
    f.Q_t = p.Q + p.P * t / pc.mass;
    f.gamma_t = Complex(1.0, pc.hbar * t / (pc.mass * p.sigma * p.sigma));
    return f;
}

Complex free_gaussian_1d(const GaussianPacket1D& p, double x, double t,
                         const PhysicalConstants& pc) {
    p.validate();
    pc.validate();
    if (!(t >= 0.0))
        throw std::invalid_argument("free_gaussian_1d: t must be >= 0");

    auto [Qt, gamma] = free_factors(p, t, pc);
    double dx = x - Qt;
    // gamma stays in the closed first quadrant, so the principal square root
    // is the right fourth root of gamma^2 for the normalization.
    Complex pref = std::pow(pi * p.sigma * p.sigma, -0.25) / std::sqrt(gamma);
    Complex phase(0.0, p.P * p.P * t / (2.0 * pc.mass * pc.hbar) + p.P * dx / pc.hbar);
    Complex spread = -dx * dx / (2.0 * p.sigma * p.sigma * gamma);
    return pref * std::exp(phase + spread);
}

Complex free_gaussian_2d(const GaussianPacket2D& p, double x, double y, double t,
                         const PhysicalConstants& pc) {
    return free_gaussian_1d(p.axis(0), x, t, pc) * free_gaussian_1d(p.axis(1), y, t, pc);
}

} // namespace hfk
