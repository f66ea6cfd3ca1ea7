#pragma once
#include <array>
#include <span>

#include "hfk/types.hpp"

namespace hfk {

// Free-particle kernel in f dimensions:
//   (m / 2 pi i hbar t)^{f/2} exp(i m |dq|^2 / (2 hbar t))
// with the principal branch, i.e. phase e^{-i pi f/4} in the prefactor for t > 0.
// f is the length of dq (1 or 2). Throws for t <= 0.
Complex free_propagator(std::span<const double> dq, double t,
                        const PhysicalConstants& pc);

Complex free_propagator_1d(double dx, double t, const PhysicalConstants& pc);
Complex free_propagator_2d(double dx, double dy, double t, const PhysicalConstants& pc);

// 1D kernel continued to complex displacement. Used by closed forms whose
// source point sits below the real axis; the continuation is entire in dx.
Complex free_propagator_displaced(Complex dx, double t, const PhysicalConstants& pc);

} // namespace hfk
