#pragma once
#include "hfk/quadrature.hpp"
#include "hfk/types.hpp"

namespace hfk {

// Classical crossing point of the straight path x' -> x with the shutter
// time t0: the place the erfc argument measures the shutter offset from.
struct MoshinskyParams {
    double x0;
};

MoshinskyParams moshinsky_params(double x, double xp, double t, double t0);

// Shutter at x1 opening instantaneously at t0: closed form built from the
// free kernel and erfc of a pinned-branch complex argument (phase -pi/4 on
// the real coefficient). Requires xp < x1 < x and 0 < t0 < t.
Complex moshinsky_propagator(double x, double xp, double t, double x1, double t0,
                             const PhysicalConstants& pc);

struct BruteForceResult {
    Complex value{0.0, 0.0};
    double err_estimate = 0.0;
    // Magnitude of the analytic completion for the range cut off at
    // x1 - truncation_window; 0 when no completion was applicable.
    double tail_magnitude = 0.0;
    bool tail_completed = false;
    bool tolerance_met = true;
    long evaluations = 0;
};

// Direct quadrature of the defining spatial integral: two free kernels
// chained over the transmitted half-line, truncated at x1 - truncation_window.
// When the cut lies deep in the oscillatory wing the discarded tail is
// restored by a two-term integration-by-parts estimate, which makes the
// value independent of the window; otherwise the raw truncated integral is
// returned. Deliberately shares no code with moshinsky_propagator's erfc
// route so the two can serve as mutual oracles.
BruteForceResult moshinsky_bruteforce_eval(double x, double xp, double t, double x1,
                                           double t0, const PhysicalConstants& pc,
                                           double truncation_window,
                                           const QuadratureSpec& quad = {});

// Value-only wrapper; throws ToleranceNotMet when the estimate is out of spec.
Complex moshinsky_bruteforce(double x, double xp, double t, double x1, double t0,
                             const PhysicalConstants& pc, double truncation_window);

} // namespace hfk
