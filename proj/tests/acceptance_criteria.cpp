// Acceptance gate. Each criterion prints exactly one PASS/FAIL line with the
// measured numbers and its wall time; the exit code is the failure count.
// Tolerances are pinned here, next to the checks that use them.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hfk/aperture.hpp"
#include "hfk/engine1d.hpp"
#include "hfk/engine2d.hpp"
#include "hfk/moshinsky.hpp"
#include "hfk/opening_shutter.hpp"
#include "hfk/packets.hpp"
#include "hfk/propagators.hpp"
#include "hfk/scenario.hpp"
#include "hfk/validation.hpp"

using hfk::Complex;

namespace {

const hfk::PhysicalConstants kPc{};

double rel_dev(Complex got, Complex want) {
    return std::abs(got - want) / std::abs(want);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

// ---- criterion 1: kernel-product time quadrature vs its erfc closed form ----

Outcome criterion1() {
    auto rep = hfk::check_identity_erfc_u();
    bool pass = rep.samples == 10 && rep.max_rel_dev <= 1e-8;
    return {pass, "erfc identity max rel dev " + fmt(rep.max_rel_dev) + " over " +
                      std::to_string(rep.samples) + " tuples, need <= 1e-8"};
}

// ---- criterion 2: weighted identity for several eta values ----

Outcome criterion2() {
    const Complex etas[] = {{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}, {3.0, 2.0}};
    double worst = 0.0;
    int samples = 0;
    for (Complex eta : etas) {
        auto rep = hfk::check_identity_eta(eta);
        worst = std::max(worst, rep.max_rel_dev);
        samples = rep.samples;
    }
    bool pass = samples == 10 && worst <= 1e-6;
    return {pass, "eta identity worst rel dev " + fmt(worst) +
                      " over 4 eta values, need <= 1e-6"};
}

// ---- criterion 3: step-opening triad, engine vs closed form vs brute force ----

Outcome criterion3() {
    const double xp = 0.0, x1 = 8.0, t = 0.05;
    const double t0s[] = {0.008, 0.016, 0.04, 0.044, 0.048};
    const double xs[] = {8.7, 9.3, 10.0, 10.8, 11.6};

    double worst_pair = 0.0;
    double exact_dev = -1.0;
    for (double t0 : t0s) {
        hfk::HfkRequest1D req;
        req.xp_or_packet = xp;
        req.t = t;
        req.screen = {x1};
        req.aperture = hfk::chi_moshinsky_open(t0);
        req.quad.abs_tol = 1e-18;
        req.quad.rel_tol = 1e-8;
        for (double x : xs) {
            req.x = x;
            Complex a = hfk::hfk_propagator_1d(req);
            Complex b = hfk::moshinsky_propagator(x, xp, t, x1, t0, kPc);
            Complex c = hfk::moshinsky_bruteforce(x, xp, t, x1, t0, kPc, 200.0);
            worst_pair = std::max({worst_pair, rel_dev(a, b), rel_dev(b, c),
                                   rel_dev(a, c)});
            if (t0 == 0.04 && x == 10.0) {
                Complex half_free = 0.5 * hfk::free_propagator_1d(x - xp, t, kPc);
                exact_dev = rel_dev(b, half_free);
            }
        }
    }
    bool pass = worst_pair <= 1e-6 && exact_dev >= 0.0 && exact_dev <= 1e-12;
    return {pass, "triad worst pairwise rel dev " + fmt(worst_pair) +
                      " over 25 points, need <= 1e-6; half-kernel point dev " +
                      fmt(exact_dev) + ", need <= 1e-12"};
}

// ---- criterion 4: exponential opening vs closed form, and its open limit ----

Outcome criterion4() {
    const double xp = 0.0, x1 = 8.0, x = 10.0, t = 0.05;
    hfk::HfkRequest1D req;
    req.x = x;
    req.xp_or_packet = xp;
    req.t = t;
    req.screen = {x1};
    req.quad.abs_tol = 1e-18;
    req.quad.rel_tol = 1e-8;

    double worst = 0.0;
    for (double tau : {1e-4, 1e-2, 1.0}) {
        req.aperture = hfk::chi_exp_opening(tau);
        Complex got = hfk::hfk_propagator_1d(req);
        Complex want = hfk::opening_shutter_propagator(x, xp, t, x1, tau, kPc);
        worst = std::max(worst, rel_dev(got, want));
    }

    req.aperture = hfk::chi_exp_opening(1e-10);
    Complex open_limit = hfk::hfk_propagator_1d(req);
    double limit_dev = rel_dev(open_limit, hfk::free_propagator_1d(x - xp, t, kPc));

    bool pass = worst <= 1e-6 && limit_dev <= 1e-6;
    return {pass, "shutter rel dev " + fmt(worst) +
                      " over tau {1e-4,1e-2,1}, need <= 1e-6; tau=1e-10 vs free " +
                      fmt(limit_dev) + ", need <= 1e-6"};
}

// ---- shared machinery for the amplitude-sum checks (criteria 5 and 6c) ----

hfk::HfkRequest1D packet_request(double x, hfk::Aperture ap) {
    hfk::HfkRequest1D req;
    req.x = x;
    req.xp_or_packet = hfk::GaussianPacket1D{0.0, 200.0, 0.1};
    req.t = 0.05;
    req.screen = {8.0};
    req.aperture = std::move(ap);
    req.quad.abs_tol = 1e-12;
    req.quad.rel_tol = 1e-10;
    return req;
}

std::vector<double> grid64() {
    return hfk::GridAxis{8.9, 11.1, 64}.points();
}

// max over the grid of |psi_a + psi_b - free| for two complementary apertures
double complement_sum_dev(const hfk::Aperture& a, const hfk::Aperture& b) {
    double worst = 0.0;
    for (double x : grid64()) {
        Complex pa = hfk::hfk_wavefunction_1d(packet_request(x, a));
        Complex pb = hfk::hfk_wavefunction_1d(packet_request(x, b));
        Complex free =
            hfk::free_gaussian_1d({0.0, 200.0, 0.1}, x, 0.05, kPc);
        worst = std::max(worst, std::abs(pa + pb - free));
    }
    return worst;
}

// ---- criterion 5: chi and 1-chi sum to the free wave function ----

Outcome criterion5() {
    hfk::Aperture w = hfk::chi_window(0.04, 5e-4);
    hfk::Aperture complement;
    complement.chi = [inner = w.chi](double q1, double t1) {
        return 1.0 - inner(q1, t1);
    };
    complement.time_breakpoints = w.time_breakpoints;
    complement.name = "window_complement";

    double worst = complement_sum_dev(w, complement);
    bool pass = worst <= 1e-8;
    return {pass, "window + complement vs free, max abs dev " + fmt(worst) +
                      " on 64 points, need <= 1e-8"};
}

// ---- criterion 6: 1D density curves at the published shutter parameters ----

Outcome criterion6() {
    std::ostringstream detail;
    bool pass = true;
    auto scenarios_start = std::chrono::steady_clock::now();

    // (a) free curve: peak position and height
    {
        auto r = hfk::run_scenario(*hfk::find_builtin("fig1_free"));
        std::size_t imax = static_cast<std::size_t>(
            std::max_element(r.psi_sq.begin(), r.psi_sq.end()) -
            r.psi_sq.begin());
        double xpeak = r.xs[imax];
        double peak = r.psi_sq[imax];
        bool ok_pos = std::abs(xpeak - 10.0) <= 0.02;
        bool ok_height = std::abs(peak - 1.1066) <= 0.011066;
        pass = pass && ok_pos && ok_height && r.failed_points == 0;
        detail << "free peak at x=" << xpeak << " (need 10+-0.02), height "
               << peak << " (need 1.1066+-1%)";
    }

    // (b) window curve: diffraction-in-time oscillations
    {
        auto r = hfk::run_scenario(*hfk::find_builtin("fig1_window"));
        int maxima = 0;
        for (std::size_t i = 1; i + 1 < r.psi_sq.size(); ++i)
            if (r.psi_sq[i] > r.psi_sq[i - 1] && r.psi_sq[i] > r.psi_sq[i + 1])
                ++maxima;
        pass = pass && maxima >= 3 && r.failed_points == 0;
        detail << "; window has " << maxima << " local maxima (need >= 3)";
    }

    // the 512-point curves themselves carry the 2-minute budget
    double scen_secs = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - scenarios_start)
                           .count();
    pass = pass && scen_secs < 120.0;
    detail << "; 512-point runs took " << fmt(scen_secs) << "s (need < 120)";

    // (c) open-at and close-at amplitudes sum to the free amplitude
    {
        double worst = complement_sum_dev(hfk::chi_moshinsky_open(0.04),
                                          hfk::chi_close_at(0.04));
        pass = pass && worst <= 1e-8;
        detail << "; open+close vs free max abs dev " << fmt(worst)
               << " (need <= 1e-8)";
    }

    return {pass, detail.str()};
}

// ---- criterion 7: 2D smoke grids, symmetry, control, variance ordering ----

Outcome criterion7() {
    const char* names[] = {"fig2_concave", "fig2_flat",        "fig2_convex",
                           "fig3_slit",    "fig3_slit_window", "fig3_ellipse"};
    std::ostringstream detail;
    bool pass = true;
    double variance[3] = {0.0, 0.0, 0.0};

    for (int s = 0; s < 6; ++s) {
        hfk::ScenarioConfig cfg = *hfk::find_builtin(names[s]);
        cfg.x.n = 64;
        cfg.y.n = 48;

        auto t0 = std::chrono::steady_clock::now();
        auto r = hfk::run_scenario(cfg);
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();

        const std::size_t nx = r.xs.size(), ny = r.ys.size();
        double max_err = 0.0;
        for (double e : r.err) max_err = std::max(max_err, e);

        double mirror = 0.0;
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < ny / 2; ++j) {
                double up = std::sqrt(r.psi_sq[i * ny + j]);
                double dn = std::sqrt(r.psi_sq[i * ny + (ny - 1 - j)]);
                mirror = std::max(mirror, std::abs(up - dn));
            }

        std::size_t imax = static_cast<std::size_t>(
            std::max_element(r.psi_sq.begin(), r.psi_sq.end()) -
            r.psi_sq.begin());
        double xm = r.xs[imax / ny], ym = r.ys[imax % ny];

        if (s < 3) {
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < nx; ++i)
                for (std::size_t j = 0; j < ny; ++j) {
                    double p = r.psi_sq[i * ny + j];
                    num += p * r.ys[j] * r.ys[j];
                    den += p;
                }
            variance[s] = num / den;
        }

        bool ok = r.failed_points == 0 && max_err <= 1e-6 && mirror <= 1e-8 &&
                  std::abs(xm - 10.0) <= 0.2 && std::abs(ym) <= 0.1 &&
                  secs < 120.0;
        pass = pass && ok;
        detail << (s ? "; " : "") << names[s] << (ok ? " ok" : " BAD")
               << " (err " << fmt(max_err) << ", mirror " << fmt(mirror)
               << ", max at " << xm << "," << ym << ", " << fmt(secs) << "s)";
    }

    // flat-screen fully open control against the exact free 2D packet
    {
        hfk::HfkRequest2D req;
        req.q = {10.0, 0.0};
        hfk::GaussianPacket2D p;
        p.Q = {0.0, 0.0};
        p.P = {200.0, 0.0};
        p.sigma = {0.1, 0.1};
        req.source = p;
        req.t = 0.05;
        req.screen = {8.0, 0.0};
        req.aperture = hfk::chi_open();
        req.quad.abs_tol = 1e-9;
        req.quad.rel_tol = 1e-7;
        Complex got = hfk::hfk_wavefunction_2d(req);
        Complex want = hfk::free_gaussian_2d(p, 10.0, 0.0, 0.05, kPc);
        double dev = rel_dev(got, want);
        pass = pass && dev <= 2e-3;
        detail << "; open control dev " << fmt(dev) << " (need <= 2e-3)";
    }

    bool order = variance[2] < variance[1] && variance[1] < variance[0];
    pass = pass && order;
    detail << "; y-variance convex " << fmt(variance[2]) << " < flat "
           << fmt(variance[1]) << " < concave " << fmt(variance[0])
           << (order ? "" : " ORDER VIOLATED");

    return {pass, detail.str()};
}

// ---- criterion 8: worker count must not change a single output byte ----

Outcome criterion8() {
    const hfk::ScenarioConfig& cfg = *hfk::find_builtin("fig1_window");
    auto r1 = hfk::run_scenario(cfg, 1);
    auto r3 = hfk::run_scenario(cfg, 3);
    std::string c1 = hfk::result_to_csv(r1);
    std::string c3 = hfk::result_to_csv(r3);
    bool pass = c1 == c3 && !c1.empty();
    return {pass, std::string("csv workers 1 vs 3 ") +
                      (c1 == c3 ? "byte-identical" : "DIFFER") + ", " +
                      std::to_string(c1.size()) + " bytes"};
}

} // namespace

int main() {
    struct Entry {
        int id;
        Outcome (*fn)();
        double budget_seconds; // 0 = no runtime bound
    };
    const Entry entries[] = {
        {1, criterion1, 5.0}, {2, criterion2, 0.0}, {3, criterion3, 60.0},
        {4, criterion4, 0.0}, {5, criterion5, 0.0}, {6, criterion6, 0.0},
        {7, criterion7, 0.0}, {8, criterion8, 0.0},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = e.fn();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (e.budget_seconds > 0.0 && secs >= e.budget_seconds) {
            o.pass = false;
            o.detail += "; over the " + fmt(e.budget_seconds) + "s budget";
        }
        std::printf("criterion %d: %s (%s, %.1fs)\n", e.id,
                    o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("acceptance: %d/8 criteria passed\n", 8 - failures);
    return failures;
}
