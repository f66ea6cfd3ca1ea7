#include "hfk/engine1d.hpp"

#include <algorithm>
#include <cmath>

#include "hfk/oscillatory.hpp"
#include "hfk/propagators.hpp"

namespace hfk {

namespace {

struct Setup {
    Integrand g;          // full integrand on (0, t)
    double lo, hi;        // clipped aperture support
    bool chain_lo, chain_up;
    double a_coeff, b_coeff; // endpoint phase coefficients
    // Widest half-period chain each endpoint can carry before the opposite
    // phase term oscillates comparably fast inside a single cell.
    double edge_cap_lo, edge_cap_up;
    std::vector<double> breakpoints; // interior of (lo, hi), sorted unique
    double scale;         // coarse magnitude of the free-evolution answer
};

void clip_sort_unique(std::vector<double>& v, double lo, double hi) {
    std::erase_if(v, [&](double b) { return !(b > lo && b < hi); });
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

Setup make_setup(const HfkRequest1D& req, bool packet_mode) {
    req.constants.validate();
    if (!(req.t > 0.0))
        throw std::domain_error("hfk_1d: t must be > 0");
    req.quad.validate(0.0, req.t);
    const double x1 = req.screen.x1;
    if (!(req.x > x1))
        throw std::domain_error("hfk_1d: observation point must satisfy x > x1");

    Setup s;
    s.lo = std::max(0.0, req.aperture.time_support_lo);
    s.hi = std::min(req.t, req.aperture.time_support_hi);

    const PhysicalConstants pc = req.constants;
    const double x = req.x;
    const double t = req.t;
    const auto& ap = req.aperture;
    s.b_coeff = pc.mass * (x - x1) * (x - x1) / (2.0 * pc.hbar);

    if (packet_mode) {
        const auto& p = std::get<GaussianPacket1D>(req.xp_or_packet);
        p.validate();
        s.g = [x, x1, t, pc, p, &ap](double t1) {
            double u = 0.5 * ((x - x1) / (t - t1) + (x1 - p.Q) / t1);
            return u * free_propagator_1d(x - x1, t - t1, pc) * ap.chi(0.0, t1) *
                   free_gaussian_1d(p, x1, t1, pc);
        };
        s.a_coeff = 0.0;
        s.chain_lo = false; // the packet's Gaussian tail kills the t1 -> 0 edge
        double gmod = std::abs(free_factors(p, t, pc).gamma_t);
        s.scale = std::pow(pi * p.sigma * p.sigma, -0.25) / std::sqrt(gmod);
    } else {
        const double xp = std::get<double>(req.xp_or_packet);
        if (!(xp < x1))
            throw std::domain_error("hfk_1d: propagator mode needs xp < x1");
        s.g = [x, x1, xp, t, pc, &ap](double t1) {
            double u = 0.5 * ((x - x1) / (t - t1) + (x1 - xp) / t1);
            return u * free_propagator_1d(x - x1, t - t1, pc) * ap.chi(0.0, t1) *
                   free_propagator_1d(x1 - xp, t1, pc);
        };
        s.a_coeff = pc.mass * (x1 - xp) * (x1 - xp) / (2.0 * pc.hbar);
        s.chain_lo = s.lo == 0.0;
        s.scale = std::sqrt(pc.mass / (2.0 * pi * pc.hbar * t));
    }
    s.chain_up = s.hi == t;

    s.breakpoints = ap.time_breakpoints;
    s.breakpoints.insert(s.breakpoints.end(), req.quad.breakpoints.begin(),
                         req.quad.breakpoints.end());
    if (packet_mode) {
        // The packet sweeps past the shutter in a time window far narrower
        // than t; anchor the adaptive pass so the arrival bump is sampled.
        const auto& p = std::get<GaussianPacket1D>(req.xp_or_packet);
        if (p.P != 0.0) {
            double t_cross = pc.mass * (x1 - p.Q) / p.P;
            if (t_cross > 0.0 && t_cross < t) {
                double w = pc.mass * p.sigma / std::abs(p.P) *
                           std::abs(free_factors(p, t_cross, pc).gamma_t);
                for (double k : {-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0})
                    s.breakpoints.push_back(t_cross + k * w);
            }
        }
    }
    clip_sort_unique(s.breakpoints, s.lo, s.hi);
    return s;
}

EvalResult evaluate(const Setup& s, const QuadratureSpec& quad) {
    EvalResult out;
    if (!(s.hi > s.lo)) return out; // aperture never open: exactly zero

    const double span = s.hi - s.lo;

    auto run_pass = [&](double budget, EvalResult& acc) {
        double gap_lo = (s.breakpoints.empty() ? s.hi : s.breakpoints.front()) - s.lo;
        double gap_up = s.hi - (s.breakpoints.empty() ? s.lo : s.breakpoints.back());
        double edge_lo = s.chain_lo
                             ? std::min({gap_lo / 4.0, s.a_coeff / pi, span / 3.0})
                             : 0.0;
        double edge_up = s.chain_up
                             ? std::min({gap_up / 4.0, s.b_coeff / pi, span / 3.0})
                             : 0.0;

        double chain_budget = 0.15 * budget;
        if (edge_lo > 0.0) {
            auto r = integrate_inverse_phase_edge(s.g, s.a_coeff, edge_lo,
                                                  chain_budget, 400);
            acc.value += r.value;
            acc.err_estimate += r.err_estimate;
            acc.evaluations += r.evaluations;
        }
        if (edge_up > 0.0) {
            double t_hi = s.hi;
            auto flipped = [&](double tau) { return s.g(t_hi - tau); };
            auto r = integrate_inverse_phase_edge(flipped, s.b_coeff, edge_up,
                                                  chain_budget, 400);
            acc.value += r.value;
            acc.err_estimate += r.err_estimate;
            acc.evaluations += r.evaluations;
        }

        double mid_lo = s.lo + edge_lo;
        double mid_hi = s.hi - edge_up;
        if (mid_hi > mid_lo) {
            QuadratureSpec qs = quad;
            qs.abs_tol = budget - (edge_lo > 0.0 ? chain_budget : 0.0) -
                         (edge_up > 0.0 ? chain_budget : 0.0);
            qs.rel_tol = 1e-300; // budget is managed here, in absolute terms
            qs.breakpoints = s.breakpoints;
            clip_sort_unique(qs.breakpoints, mid_lo, mid_hi);
            auto r = integrate_complex(s.g, mid_lo, mid_hi, qs);
            acc.value += r.value;
            acc.err_estimate += r.err_estimate;
            acc.evaluations += r.evaluations;
        }
    };

    // When the answer sits far below the free-evolution scale (deep shadow),
    // a single pass at rel_tol * scale cannot give a relative verdict. Walk
    // the budget down against the current best value until it stabilizes.
    double budget = std::max(quad.abs_tol, quad.rel_tol * s.scale);
    run_pass(budget, out);
    for (int pass = 1; pass < 4; ++pass) {
        if (out.err_estimate <=
            std::max(quad.abs_tol, quad.rel_tol * std::abs(out.value)))
            break;
        double next = std::max(quad.abs_tol, 0.5 * quad.rel_tol * std::abs(out.value));
        if (!(next < 0.5 * budget)) break;
        EvalResult refined;
        run_pass(next, refined);
        refined.evaluations += out.evaluations;
        out = refined;
        budget = next;
    }

    out.tolerance_met =
        out.err_estimate <= std::max(quad.abs_tol, quad.rel_tol * std::abs(out.value));
    return out;
}

} // namespace

EvalResult hfk_propagator_1d_eval(const HfkRequest1D& req) {
    if (!std::holds_alternative<double>(req.xp_or_packet))
        throw std::invalid_argument("hfk_propagator_1d: source must be a point");
    Setup s = make_setup(req, false);
    return evaluate(s, req.quad);
}

Complex hfk_propagator_1d(const HfkRequest1D& req) {
    EvalResult r = hfk_propagator_1d_eval(req);
    if (!r.tolerance_met)
        throw ToleranceNotMet("hfk_propagator_1d: tolerance not met", r.value,
                              r.err_estimate);
    return r.value;
}

EvalResult hfk_wavefunction_1d_eval(const HfkRequest1D& req) {
    if (!std::holds_alternative<GaussianPacket1D>(req.xp_or_packet))
        throw std::invalid_argument("hfk_wavefunction_1d: source must be a packet");
    Setup s = make_setup(req, true);
    return evaluate(s, req.quad);
}

Complex hfk_wavefunction_1d(const HfkRequest1D& req) {
    EvalResult r = hfk_wavefunction_1d_eval(req);
    if (!r.tolerance_met)
        throw ToleranceNotMet("hfk_wavefunction_1d: tolerance not met", r.value,
                              r.err_estimate);
    return r.value;
}

} // namespace hfk
