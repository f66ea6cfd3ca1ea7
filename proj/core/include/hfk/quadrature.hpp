#pragma once
#include "hfk/types.hpp"
#include <functional>
#include <vector>

namespace hfk {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;
    // interior points where the integrand jumps or loses smoothness;
    // must be strictly inside the interval, sorted, deduplicated
    std::vector<double> breakpoints;

    void validate(double a, double b) const;
};

struct IntegralResult {
    Complex value{0.0, 0.0};
    double err_estimate = 0.0;
    bool tolerance_met = true;
    long evaluations = 0;
};

using Integrand = std::function<Complex(double)>;
using Integrand2D = std::function<Complex(double, double)>;

// One 15-point Kronrod panel with embedded 7-point Gauss error estimate,
// real and imaginary parts estimated separately. Panel endpoints are never
// evaluated; node pairs are summed symmetrically so a mirrored integrand
// produces bit-identical results.
Complex gk15_panel(const Integrand& f, double a, double b, double& err, long& evals);

// Globally adaptive bisection with an error-ordered panel queue. Interval is
// pre-split at every breakpoint. On exhaustion the best estimate is returned
// with tolerance_met = false.
IntegralResult integrate_complex(const Integrand& f, double a, double b,
                                 const QuadratureSpec& spec);

struct Rectangle {
    double ax = 0.0, bx = 1.0;
    double ay = 0.0, by = 1.0;
    std::vector<double> x_breakpoints, y_breakpoints;
};

// Tensorized nesting: adaptive in x of adaptive-in-y slices, breakpoints
// honored per axis. The inner error is folded into the estimate.
IntegralResult integrate_complex_2d(const Integrand2D& f, const Rectangle& dom,
                                    const QuadratureSpec& spec);

} // namespace hfk
