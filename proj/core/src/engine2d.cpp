#include "hfk/engine2d.hpp"

#include <algorithm>
#include <cmath>

#include "hfk/oscillatory.hpp"
#include "hfk/propagators.hpp"

namespace hfk {

namespace {

struct SourceView {
    bool packet = false;
    GaussianPacket2D p;
    std::array<double, 2> qp{0.0, 0.0};

    double cx() const { return packet ? p.Q[0] : qp[0]; }
    double cy() const { return packet ? p.Q[1] : qp[1]; }
};

SourceView view_source(const HfkRequest2D& req, bool want_packet) {
    SourceView v;
    if (std::holds_alternative<GaussianPacket2D>(req.source)) {
        if (!want_packet)
            throw std::invalid_argument("hfk_propagator_2d: source must be a point");
        v.packet = true;
        v.p = std::get<GaussianPacket2D>(req.source);
        v.p.validate();
    } else {
        if (want_packet)
            throw std::invalid_argument("hfk_wavefunction_2d: source must be a packet");
        v.qp = std::get<std::array<double, 2>>(req.source);
    }
    return v;
}

// Curve parameter of the point closest to pt; Newton on the squared distance.
double closest_param(const Screen2D& sc, const std::array<double, 2>& pt) {
    double y = pt[1];
    for (int i = 0; i < 60; ++i) {
        double e = pt[0] - sc.d - sc.alpha * y * y;
        double g = -4.0 * sc.alpha * y * e + 2.0 * (y - pt[1]);
        double gg = -4.0 * sc.alpha * e + 8.0 * sc.alpha * sc.alpha * y * y + 2.0;
        if (!(std::abs(gg) > 1e-12)) break;
        double step = g / gg;
        y -= step;
        if (std::abs(step) <= 1e-14 * (1.0 + std::abs(y))) break;
    }
    return y;
}

double curve_dist2(const Screen2D& sc, const std::array<double, 2>& pt, double y1) {
    auto q1 = sc.curve(y1);
    double dx = pt[0] - q1[0];
    double dy = pt[1] - q1[1];
    return dx * dx + dy * dy;
}

struct Engine {
    const HfkRequest2D& req;
    SourceView src;
    PhysicalConstants pc;
    double t;
    double Ywin;
    double scale; // coarse free-evolution magnitude for budget setting
    double lo = 0.0, hi = 0.0;
    bool chain_lo = false, chain_up = false;
    double a_coeff = 0.0, b_coeff = 0.0;
    std::vector<double> tbreaks;

    long evals = 0;
    double inner_err_sum = 0.0; // inner errors weighted by the local measure
    double inner_mag_sum = 0.0; // inner magnitudes, same weighting
    double inner_wsum = 0.0;
    double measure_cap = 0.0;   // current accounting region's width
    double mid_abs_mass = -1.0; // latest estimate of the outer L1 mass

    Engine(const HfkRequest2D& r, bool want_packet)
        : req(r), src(view_source(r, want_packet)), pc(r.constants), t(r.t) {
        pc.validate();
        if (!(t > 0.0)) throw std::domain_error("hfk_2d: t must be > 0");
        req.quad.validate(0.0, t);
        const Screen2D& sc = req.screen;
        if (!(sc.s(req.q[0], req.q[1]) > 0.0))
            throw std::domain_error("hfk_2d: observation point must have s(q) > 0");
        if (!(sc.s(src.cx(), src.cy()) < 0.0))
            throw std::domain_error("hfk_2d: source must have s < 0");

        lo = std::max(0.0, req.aperture.time_support_lo);
        hi = std::min(t, req.aperture.time_support_hi);

        Ywin = req.y_window > 0.0 ? req.y_window : auto_window();

        if (src.packet) {
            double g0 = std::abs(free_factors(src.p.axis(0), t, pc).gamma_t);
            double g1 = std::abs(free_factors(src.p.axis(1), t, pc).gamma_t);
            scale = std::pow(pi * pi * src.p.sigma[0] * src.p.sigma[0] *
                                 src.p.sigma[1] * src.p.sigma[1],
                             -0.25) /
                    std::sqrt(g0 * g1);
        } else {
            scale = pc.mass / (2.0 * pi * pc.hbar * t);
        }

        chain_up = hi == t;
        chain_lo = !src.packet && lo == 0.0;
        double yq = closest_param(req.screen, req.q);
        b_coeff = pc.mass * curve_dist2(req.screen, req.q, clamp_to_support(yq)) /
                  (2.0 * pc.hbar);
        if (!src.packet) {
            double ys = closest_param(req.screen, src.qp);
            a_coeff = pc.mass * curve_dist2(req.screen, src.qp, clamp_to_support(ys)) /
                      (2.0 * pc.hbar);
        }

        tbreaks = req.aperture.time_breakpoints;
        tbreaks.insert(tbreaks.end(), req.quad.breakpoints.begin(),
                       req.quad.breakpoints.end());
        if (src.packet && src.p.P[0] != 0.0) {
            double t_cross = pc.mass * (sc.d - src.p.Q[0]) / src.p.P[0];
            if (t_cross > 0.0 && t_cross < t) {
                double w = pc.mass * src.p.sigma[0] / std::abs(src.p.P[0]) *
                           std::abs(free_factors(src.p.axis(0), t_cross, pc).gamma_t);
                for (double k : {-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0})
                    tbreaks.push_back(t_cross + k * w);
            }
        }
        std::erase_if(tbreaks, [&](double b) { return !(b > lo && b < hi); });
        std::sort(tbreaks.begin(), tbreaks.end());
        tbreaks.erase(std::unique(tbreaks.begin(), tbreaks.end()), tbreaks.end());
    }

    double auto_window() const {
        const Aperture& ap = req.aperture;
        double ap_size = 0.0;
        if (std::isfinite(ap.space_support_lo) && std::isfinite(ap.space_support_hi))
            ap_size = std::max(std::abs(ap.space_support_lo),
                               std::abs(ap.space_support_hi));
        double spread = 0.0;
        if (src.packet) {
            double t_cross = src.p.P[0] != 0.0
                                 ? pc.mass * (req.screen.d - src.p.Q[0]) / src.p.P[0]
                                 : 0.5 * t;
            t_cross = std::clamp(t_cross, 0.0, t);
            spread = src.p.sigma[1] *
                     std::abs(free_factors(src.p.axis(1), t_cross, pc).gamma_t);
        }
        return std::clamp(8.0 * std::max(spread, ap_size), 1.0, 50.0);
    }

    double clamp_to_support(double y1) const {
        double slo = std::max(req.aperture.space_support_lo, -Ywin);
        double shi = std::min(req.aperture.space_support_hi, Ywin);
        if (!src.packet) {
            // wings extend past Ywin for point sources
            slo = req.aperture.space_support_lo;
            shi = req.aperture.space_support_hi;
        }
        return std::clamp(y1, slo, shi);
    }

    Complex source_factor(double x1, double y1, double t1) const {
        if (src.packet) return free_gaussian_2d(src.p, x1, y1, t1, pc);
        return free_propagator_2d(x1 - src.qp[0], y1 - src.qp[1], t1, pc);
    }

    // Share of the accounting region's measure one outer sample stands for:
    // about one oscillation period of the outer phase, capped by the region
    // width. Down-weights samples the outer rule packs densely near edges.
    double measure_weight(double t1) const {
        double s = t - t1;
        double dphi = b_coeff / (s * s) - a_coeff / (t1 * t1);
        double w = pi / std::max(std::abs(dphi), 1e-300);
        return std::min(w, measure_cap);
    }

    Complex integrand(double y1, double t1) const {
        const Screen2D& sc = req.screen;
        auto q1 = sc.curve(y1);
        double s = t - t1;
        double vx = (req.q[0] - q1[0]) / s + (q1[0] - src.cx()) / t1;
        double vy = (req.q[1] - q1[1]) / s + (q1[1] - src.cy()) / t1;
        auto gs = sc.grad_s(q1[0], q1[1]);
        double w = vx * gs[0] + vy * gs[1];
        return 0.5 * w * free_propagator_2d(req.q[0] - q1[0], req.q[1] - q1[1], s, pc) *
               req.aperture.chi(y1, t1) * source_factor(q1[0], q1[1], t1);
    }

    // Phase of the integrand as a function of y1 at fixed t1 (point source).
    double phase_y(double y1, double t1) const {
        double s = t - t1;
        return pc.mass / (2.0 * pc.hbar) *
               (curve_dist2(req.screen, req.q, y1) / s +
                curve_dist2(req.screen, {src.qp[0], src.qp[1]}, y1) / t1);
    }

    // Stationary curve parameter of phase_y; exact for a flat screen.
    double stationary_param(double t1, double* curvature) const {
        double s = t - t1;
        double y = (req.q[1] * t1 + src.cy() * s) / t;
        auto dphi = [&](double yy) {
            const Screen2D& sc = req.screen;
            auto c = sc.curve(yy);
            double tx = 2.0 * sc.alpha * yy;
            double ax = c[0] - req.q[0], ay = c[1] - req.q[1];
            double bx = c[0] - src.qp[0], by = c[1] - src.qp[1];
            return 2.0 * ((ax * tx + ay) / s + (bx * tx + by) / t1);
        };
        double gg = 2.0 * (1.0 / s + 1.0 / t1);
        for (int i = 0; i < 40; ++i) {
            double g = dphi(y);
            double h = 1e-6 * (1.0 + std::abs(y));
            gg = (dphi(y + h) - dphi(y - h)) / (2.0 * h);
            if (!(gg > 1e-12)) break;
            double step = g / gg;
            y -= step;
            if (std::abs(step) <= 1e-13 * (1.0 + std::abs(y))) break;
        }
        if (curvature) *curvature = std::max(gg, 1e-12) * pc.mass / (4.0 * pc.hbar);
        return y;
    }

    // account=false for chain-region samples: the chain's own per-cell error
    // estimator already sees their noise, and their outer weight is far below
    // the uniform-density bound used for the middle region.
    Complex inner(double t1, const QuadratureSpec& ispec, bool account = true) {
        const Aperture& ap = req.aperture;
        double slo = ap.space_support_lo;
        double shi = ap.space_support_hi;
        if (ap.space_interval) {
            auto iv = ap.space_interval(t1);
            if (!(iv[1] > iv[0])) return Complex(0.0, 0.0);
            slo = std::max(slo, iv[0]);
            shi = std::min(shi, iv[1]);
        }

        auto h = [&](double y1) { return integrand(y1, t1); };

        if (src.packet) {
            double a = std::max(slo, -Ywin);
            double b = std::min(shi, Ywin);
            if (!(b > a)) return Complex(0.0, 0.0);
            QuadratureSpec qs = ispec;
            qs.breakpoints = ap.space_breakpoints;
            std::erase_if(qs.breakpoints, [&](double v) { return !(v > a && v < b); });
            std::sort(qs.breakpoints.begin(), qs.breakpoints.end());
            qs.breakpoints.erase(
                std::unique(qs.breakpoints.begin(), qs.breakpoints.end()),
                qs.breakpoints.end());
            auto r = integrate_complex(h, a, b, qs);
            evals += r.evaluations;
            if (account) {
                double w = measure_weight(t1);
                inner_err_sum += r.err_estimate * w;
                inner_mag_sum += std::abs(r.value) * w;
                inner_wsum += w;
            }
            return r.value;
        }

        // Point source: core around the stationary parameter, oscillatory
        // wings out to any unbounded side.
        double C = 0.0;
        double ystar = stationary_param(t1, &C);
        double rc = std::min(std::sqrt(8.0 * pi / C), 50.0);
        double core_a = std::max(slo, ystar - rc);
        double core_b = std::min(shi, ystar + rc);

        Complex total(0.0, 0.0);
        double err = 0.0;
        if (!(core_b > core_a)) {
            // Supported region sits entirely in one oscillatory wing.
            auto phase0 = [this, t1](double y1) { return phase_y(y1, t1); };
            if (std::isfinite(slo) && !std::isfinite(shi)) {
                auto r = integrate_cell_chain(
                    h, monotone_phase_boundaries(phase0, slo, +1),
                    std::max(0.5 * ispec.abs_tol, 1e-300), 300);
                total = r.value;
                err = r.err_estimate;
                evals += r.evaluations;
            } else if (std::isfinite(shi) && !std::isfinite(slo)) {
                auto r = integrate_cell_chain(
                    h, monotone_phase_boundaries(phase0, shi, -1),
                    std::max(0.5 * ispec.abs_tol, 1e-300), 300);
                total = r.value;
                err = r.err_estimate;
                evals += r.evaluations;
            } else if (shi > slo) {
                QuadratureSpec qs = ispec;
                qs.breakpoints.clear();
                auto r = integrate_complex(h, slo, shi, qs);
                total = r.value;
                err = r.err_estimate;
                evals += r.evaluations;
            }
            if (account) {
                double w = measure_weight(t1);
                inner_err_sum += err * w;
                inner_mag_sum += std::abs(total) * w;
                inner_wsum += w;
            }
            return total;
        }
        {
            QuadratureSpec qs = ispec;
            qs.breakpoints.clear();
            auto r = integrate_complex(h, core_a, core_b, qs);
            evals += r.evaluations;
            err += r.err_estimate;
            total += r.value;
        }
        double wing_target = std::max(
            0.5 * std::max(ispec.abs_tol, ispec.rel_tol * std::abs(total)), 1e-300);
        auto phase = [this, t1](double y1) { return phase_y(y1, t1); };
        if (!std::isfinite(shi)) {
            auto r = integrate_cell_chain(
                h, monotone_phase_boundaries(phase, core_b, +1), wing_target, 300);
            total += r.value;
            err += r.err_estimate;
            evals += r.evaluations;
        }
        if (!std::isfinite(slo)) {
            auto r = integrate_cell_chain(
                h, monotone_phase_boundaries(phase, core_a, -1), wing_target, 300);
            total += r.value;
            err += r.err_estimate;
            evals += r.evaluations;
        }
        // Bounded sides outside the core are short oscillatory stubs.
        if (std::isfinite(slo) && core_a > slo) {
            QuadratureSpec qs = ispec;
            qs.breakpoints.clear();
            auto r = integrate_complex(h, slo, core_a, qs);
            evals += r.evaluations;
            err += r.err_estimate;
            total += r.value;
        }
        if (std::isfinite(shi) && core_b < shi) {
            QuadratureSpec qs = ispec;
            qs.breakpoints.clear();
            auto r = integrate_complex(h, core_b, shi, qs);
            evals += r.evaluations;
            err += r.err_estimate;
            total += r.value;
        }
        if (account) {
            double w = measure_weight(t1);
            inner_err_sum += err * w;
            inner_mag_sum += std::abs(total) * w;
            inner_wsum += w;
        }
        return total;
    }

    EvalResult run() {
        EvalResult out;
        if (!(hi > lo)) return out;

        double span = hi - lo;
        auto run_pass = [&](double budget, EvalResult& acc) {
            double gap_lo = (tbreaks.empty() ? hi : tbreaks.front()) - lo;
            double gap_up = hi - (tbreaks.empty() ? lo : tbreaks.back());
            double edge_lo =
                chain_lo ? std::min({gap_lo / 4.0, a_coeff / pi, span / 3.0}) : 0.0;
            double edge_up =
                chain_up ? std::min({gap_up / 4.0, b_coeff / pi, span / 3.0}) : 0.0;
            double chain_budget = 0.15 * budget;

            // Inner tolerance inside a chain is absolute per inner integral:
            // every outer sample's noise feeds the cell sums directly, so the
            // per-sample noise must sit well below the whole chain's budget.
            if (edge_up > 0.0) {
                QuadratureSpec ispec = req.quad;
                ispec.abs_tol = chain_budget / 128.0;
                ispec.rel_tol = 0.25 * req.quad.rel_tol;
                double t_hi = hi;
                auto f = [&](double tau) { return inner(t_hi - tau, ispec, false); };
                auto r = integrate_inverse_phase_edge(f, b_coeff, edge_up,
                                                      chain_budget, 150);
                acc.value += r.value;
                acc.err_estimate += r.err_estimate;
            }
            if (edge_lo > 0.0) {
                QuadratureSpec ispec = req.quad;
                ispec.abs_tol = chain_budget / 128.0;
                ispec.rel_tol = 0.25 * req.quad.rel_tol;
                auto f = [&](double t1) { return inner(t1, ispec, false); };
                auto r = integrate_inverse_phase_edge(f, a_coeff, edge_lo,
                                                      chain_budget, 150);
                acc.value += r.value;
                acc.err_estimate += r.err_estimate;
            }

            double mid_lo = lo + edge_lo;
            double mid_hi = hi - edge_up;
            if (mid_hi > mid_lo) {
                double mid_budget = budget - (edge_lo > 0.0 ? chain_budget : 0.0) -
                                    (edge_up > 0.0 ? chain_budget : 0.0);
                QuadratureSpec ispec = req.quad;
                ispec.abs_tol = 0.25 * mid_budget / (mid_hi - mid_lo);
                ispec.rel_tol = 0.1 * req.quad.rel_tol;
                // When the outer integral cancels heavily, relative inner
                // noise integrates to rel * L1 mass; once the mass is known
                // from an earlier pass, cap the inner rel accordingly.
                if (mid_abs_mass > 0.0)
                    ispec.rel_tol = std::max(
                        std::min(0.25 * mid_budget / mid_abs_mass, ispec.rel_tol),
                        1e-14);
                QuadratureSpec os = req.quad;
                os.abs_tol = mid_budget;
                os.rel_tol = 1e-300;
                os.breakpoints = tbreaks;
                std::erase_if(os.breakpoints,
                              [&](double b) { return !(b > mid_lo && b < mid_hi); });
                measure_cap = mid_hi - mid_lo;
                auto f = [&](double t1) { return inner(t1, ispec); };
                auto r = integrate_complex(f, mid_lo, mid_hi, os);
                acc.value += r.value;
                acc.err_estimate += r.err_estimate;
                // correlated inner bias, bounded over this region's measure
                if (inner_wsum > 0.0) {
                    double width = mid_hi - mid_lo;
                    acc.err_estimate += (inner_err_sum / inner_wsum) * width;
                    mid_abs_mass = (inner_mag_sum / inner_wsum) * width;
                }
            }
            inner_err_sum = 0.0;
            inner_mag_sum = 0.0;
            inner_wsum = 0.0;
        };

        // Same budget ladder as the 1D engine: refine until the target set by
        // the best value so far stops shrinking, so deep-shadow points still
        // get a relative-accuracy verdict.
        double budget = std::max(req.quad.abs_tol, req.quad.rel_tol * scale);
        run_pass(budget, out);
        for (int pass = 1; pass < 4; ++pass) {
            if (out.err_estimate <=
                std::max(req.quad.abs_tol, req.quad.rel_tol * std::abs(out.value)))
                break;
            double next =
                std::max(req.quad.abs_tol, 0.5 * req.quad.rel_tol * std::abs(out.value));
            if (!(next < 0.5 * budget)) break;
            EvalResult refined;
            run_pass(next, refined);
            out = refined;
            budget = next;
        }
        out.evaluations = evals;
        out.tolerance_met =
            out.err_estimate <=
            std::max(req.quad.abs_tol, req.quad.rel_tol * std::abs(out.value));
        return out;
    }
};

} // namespace

VisibilityReport check_visibility(const HfkRequest2D& req) {
    VisibilityReport rep;
    SourceView src;
    if (std::holds_alternative<GaussianPacket2D>(req.source)) {
        src.packet = true;
        src.p = std::get<GaussianPacket2D>(req.source);
    } else {
        src.qp = std::get<std::array<double, 2>>(req.source);
    }
    const Screen2D& sc = req.screen;
    const PhysicalConstants& pc = req.constants;

    double ymax = req.y_window > 0.0 ? req.y_window : 0.0;
    double sigma_w = 1.0;
    double center_w = 0.0;
    if (src.packet) {
        double t_cross = src.p.P[0] != 0.0
                             ? pc.mass * (sc.d - src.p.Q[0]) / src.p.P[0]
                             : 0.5 * req.t;
        t_cross = std::clamp(t_cross, 0.0, req.t);
        auto f = free_factors(src.p.axis(1), t_cross, pc);
        sigma_w = src.p.sigma[1] * std::abs(f.gamma_t);
        center_w = f.Q_t;
        if (ymax <= 0.0) ymax = std::clamp(8.0 * sigma_w, 1.0, 50.0);
    }
    if (ymax <= 0.0) ymax = 8.0;
    if (std::isfinite(req.aperture.space_support_lo) &&
        std::isfinite(req.aperture.space_support_hi)) {
        ymax = std::min(ymax, std::max(std::abs(req.aperture.space_support_lo),
                                       std::abs(req.aperture.space_support_hi)));
    }

    // Interior intersections of a straight segment with the screen parabola.
    auto crosses = [&](std::array<double, 2> a, std::array<double, 2> b,
                       bool skip_start, bool skip_end) {
        double dx = b[0] - a[0], dy = b[1] - a[1];
        double A = -sc.alpha * dy * dy;
        double B = dx - 2.0 * sc.alpha * a[1] * dy;
        double C = sc.s(a[0], a[1]);
        double eps = 1e-9;
        auto interior = [&](double u) {
            if (!(u > (skip_start ? eps : -eps) && u < 1.0 - (skip_end ? eps : -eps)))
                return false;
            return true;
        };
        if (std::abs(A) < 1e-300) {
            if (std::abs(B) < 1e-300) return false;
            return interior(-C / B);
        }
        double disc = B * B - 4.0 * A * C;
        if (disc < 0.0) return false;
        double r = std::sqrt(disc);
        return interior((-B - r) / (2.0 * A)) || interior((-B + r) / (2.0 * A));
    };

    std::array<double, 2> source_pt{src.cx(), src.cy()};
    const int n = 41;
    double wsum = 0.0, wbad = 0.0;
    for (int i = 0; i < n; ++i) {
        double y1 = -ymax + 2.0 * ymax * i / (n - 1);
        auto q1 = sc.curve(y1);
        double u = (y1 - center_w) / sigma_w;
        double w = src.packet ? std::exp(-u * u) : 1.0;
        bool bad = crosses(source_pt, q1, false, true) || crosses(q1, req.q, true, false);
        ++rep.samples;
        if (bad) {
            ++rep.flagged;
            wbad += w;
        }
        wsum += w;
    }
    rep.shadowed_weight = wsum > 0.0 ? wbad / wsum : 0.0;
    rep.ok = rep.shadowed_weight <= 1e-2;
    return rep;
}

EvalResult hfk_wavefunction_2d_eval(const HfkRequest2D& req) {
    Engine e(req, true);
    return e.run();
}

Complex hfk_wavefunction_2d(const HfkRequest2D& req) {
    EvalResult r = hfk_wavefunction_2d_eval(req);
    if (!r.tolerance_met)
        throw ToleranceNotMet("hfk_wavefunction_2d: tolerance not met", r.value,
                              r.err_estimate);
    return r.value;
}

EvalResult hfk_propagator_2d_eval(const HfkRequest2D& req) {
    Engine e(req, false);
    return e.run();
}

Complex hfk_propagator_2d(const HfkRequest2D& req) {
    EvalResult r = hfk_propagator_2d_eval(req);
    if (!r.tolerance_met)
        throw ToleranceNotMet("hfk_propagator_2d: tolerance not met", r.value,
                              r.err_estimate);
    return r.value;
}

Complex hfk_propagator_2d(const std::array<double, 2>& q,
                          const std::array<double, 2>& qp, double t,
                          const Screen2D& screen, const Aperture& aperture,
                          const QuadratureSpec& quad) {
    HfkRequest2D req;
    req.q = q;
    req.source = qp;
    req.t = t;
    req.screen = screen;
    req.aperture = aperture;
    req.quad = quad;
    return hfk_propagator_2d(req);
}

} // namespace hfk
