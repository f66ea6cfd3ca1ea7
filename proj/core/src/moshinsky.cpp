#include "hfk/moshinsky.hpp"

#include <algorithm>
#include <cmath>

#include "hfk/erfc.hpp"
#include "hfk/oscillatory.hpp"
#include "hfk/propagators.hpp"

namespace hfk {

namespace {

void require_domain(double x, double xp, double x1, double t, double t0) {
    if (!(xp < x1 && x1 < x))
        throw std::domain_error("moshinsky: need xp < x1 < x");
    if (!(t0 > 0.0 && t0 < t))
        throw std::domain_error("moshinsky: need 0 < t0 < t");
}

} // namespace

MoshinskyParams moshinsky_params(double x, double xp, double t, double t0) {
    return {x * t0 / t + xp * (t - t0) / t};
}

Complex moshinsky_propagator(double x, double xp, double t, double x1, double t0,
                             const PhysicalConstants& pc) {
    require_domain(x, xp, x1, t, t0);
    pc.validate();
    double x0 = moshinsky_params(x, xp, t, t0).x0;
    // Signed real coefficient times the fixed e^{-i pi/4} branch factor.
    double r = (x1 - x0) * std::sqrt(pc.mass * t / (2.0 * pc.hbar * t0 * (t - t0)));
    double c = std::sqrt(0.5);
    Complex zeta(r * c, -r * c);
    return free_propagator_1d(x - xp, t, pc) * (1.0 - 0.5 * erfc_complex(zeta));
}

BruteForceResult moshinsky_bruteforce_eval(double x, double xp, double t, double x1,
                                           double t0, const PhysicalConstants& pc,
                                           double truncation_window,
                                           const QuadratureSpec& quad) {
    require_domain(x, xp, x1, t, t0);
    pc.validate();
    if (!(truncation_window > 0.0))
        throw std::invalid_argument("moshinsky_bruteforce: window must be > 0");

    double s = t - t0;
    auto f = [&](double xs) {
        return free_propagator_1d(x - xs, s, pc) * free_propagator_1d(xs - xp, t0, pc);
    };

    // The product of the two kernels is A exp(i C (xs - x0)^2) with constant A.
    double x0 = moshinsky_params(x, xp, t, t0).x0;
    double C = pc.mass * t / (2.0 * pc.hbar * t0 * s);
    double amp = pc.mass / (2.0 * pi * pc.hbar * std::sqrt(s * t0));
    double scale = amp * std::sqrt(pi / C); // stationary-phase magnitude of the full line
    double a = x1 - truncation_window;
    double b = x1;

    double r0 = std::sqrt(8.0 * pi / C);
    double tail_target = 0.1 * std::max(quad.abs_tol, quad.rel_tol * scale);
    // Distance at which the dropped third series term is below tail_target.
    double d_corr = std::pow(0.375 * amp / (C * C * C * tail_target), 0.2);
    double d_eff = std::max(d_corr, 2.0 * r0);

    BruteForceResult out;
    bool completed = a <= x0 - d_eff;
    double lo = completed ? x0 - d_eff : a;

    double core_lo = std::clamp(x0 - r0, lo, b);
    double core_hi = std::clamp(x0 + r0, lo, b);

    double gk_err = 0.0;
    Complex total{0.0, 0.0};

    if (core_hi > core_lo) {
        QuadratureSpec qs = quad;
        qs.breakpoints.clear();
        auto core = integrate_complex(f, core_lo, core_hi, qs);
        total += core.value;
        gk_err += core.err_estimate;
        out.evaluations += core.evaluations;
        if (!core.tolerance_met) out.tolerance_met = false;
    }

    // Half-period cells cover the oscillatory wings exactly up to the ends.
    auto sweep = [&](double from, double to, int dir) {
        auto bound = quadratic_wing_boundaries(C, x0, from, dir);
        double prev = from;
        for (int k = 1; k < 200000; ++k) {
            double next = bound(k);
            bool last = dir > 0 ? next >= to : next <= to;
            if (last) next = to;
            double ce = 0.0;
            total += gk15_panel(f, std::min(prev, next), std::max(prev, next), ce,
                                out.evaluations);
            gk_err += ce;
            prev = next;
            if (last) return;
        }
        out.tolerance_met = false; // cell budget exhausted
    };

    if (core_hi < b) sweep(core_hi, b, +1);
    if (core_lo > lo) sweep(core_lo, lo, -1);

    if (completed) {
        total += quadratic_phase_tail(f(lo), C, x0, lo, -1);
        gk_err += 0.375 * amp / (C * C * C * std::pow(d_eff, 5.0));
        out.tail_completed = true;
        // What the raw truncation at the requested window would have dropped.
        out.tail_magnitude = std::abs(quadratic_phase_tail(f(a), C, x0, a, -1));
    }

    out.value = total;
    out.err_estimate = gk_err;
    if (gk_err > std::max(quad.abs_tol, quad.rel_tol * std::abs(total)))
        out.tolerance_met = false;
    return out;
}

Complex moshinsky_bruteforce(double x, double xp, double t, double x1, double t0,
                             const PhysicalConstants& pc, double truncation_window) {
    auto r = moshinsky_bruteforce_eval(x, xp, t, x1, t0, pc, truncation_window);
    if (!r.tolerance_met)
        throw ToleranceNotMet("moshinsky_bruteforce: tolerance not met", r.value,
                              r.err_estimate);
    return r.value;
}

} // namespace hfk
