#pragma once
#include "hfk/extrapolation.hpp"
#include "hfk/quadrature.hpp"

namespace hfk {

struct ChainResult {
    Complex value{0.0, 0.0};
    double err_estimate = 0.0;
    bool converged = true;
    int cells = 0;
    long evaluations = 0;
};

// Sums GK15 panels over consecutive half-period cells. boundary(k) must
// yield a strictly monotone sequence (ascending or descending) and is
// called with k = 0, 1, 2, ...; a NaN boundary aborts the chain. Partial
// sums are epsilon-extrapolated, so chains whose cell values alternate
// with slow algebraic decay still converge to the tail limit. Chains whose
// cells decay fast (damped integrands) terminate on term smallness.
ChainResult integrate_cell_chain(const Integrand& f,
                                 const std::function<double(int)>& boundary,
                                 double abs_target, int max_cells);

// Cell boundaries s_k for integrands carrying exp(i phase_coeff / s) on
// (0, s_edge]: the phase advances by pi per cell.
std::function<double(int)> inverse_phase_boundaries(double phase_coeff, double s_edge);

// Convenience wrapper: integral over (0, s_edge] of f with the above cells.
ChainResult integrate_inverse_phase_edge(const Integrand& f, double phase_coeff,
                                         double s_edge, double abs_target,
                                         int max_cells);

// Analytic half-period boundaries for a quadratic phase C (y - ystar)^2,
// marching outward from y0 in the given direction (+1 or -1). y0 must
// already lie on the far side of ystar in that direction.
std::function<double(int)> quadratic_wing_boundaries(double C, double ystar,
                                                     double y0, int direction);

// Boundaries found by bisection against an arbitrary monotone phase;
// used for wings where the phase is not quadratic.
std::function<double(int)> monotone_phase_boundaries(std::function<double(double)> phase,
                                                     double y0, int direction);

// Two-term stationary-free tail of int f dy for f(y) = A exp(i C (y-ystar)^2)
// with constant A, given the integrand value f(X) at the cut: side=-1 for the
// (-inf, X] tail (X < ystar), side=+1 for [X, +inf) (X > ystar). The omitted
// third term is bounded by 3|A| / (8 C^3 |X-ystar|^5).
Complex quadratic_phase_tail(Complex f_at_cut, double C, double ystar,
                             double X, int side);

} // namespace hfk
