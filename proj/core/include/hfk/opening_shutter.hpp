#pragma once
#include "hfk/types.hpp"

namespace hfk {

// Complex-shifted source point for the exponentially opening shutter.
// x_tilde = x1 - rho e^{i theta} satisfies
//   (x1 - x_tilde)^2 = (x1 - xp)^2 + 2 i hbar tau / m
// on the root that returns to xp as tau -> 0+.
struct ComplexDrift {
    Complex x_tilde;
    double rho;
    double theta; // in [0, pi/4) for tau >= 0
};

ComplexDrift opening_shutter_drift(double xp, double x1, double tau,
                                   const PhysicalConstants& pc);

// Shutter transmission rising as exp(-tau/t1): closed form via the shifted
// source point. Requires xp < x1 < x, t > 0, tau >= 0; tau = 0 reduces to
// the free kernel exactly.
Complex opening_shutter_propagator(double x, double xp, double t, double x1,
                                   double tau, const PhysicalConstants& pc);

} // namespace hfk
