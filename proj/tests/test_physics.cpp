#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "hfk/aperture.hpp"
#include "hfk/moshinsky.hpp"
#include "hfk/opening_shutter.hpp"
#include "hfk/packets.hpp"
#include "hfk/propagators.hpp"
#include "hfk/quadrature.hpp"
#include "hfk/screens.hpp"
#include "reference/reference_values.hpp"

using hfk::Complex;

namespace {

const hfk::PhysicalConstants pc;

double rel_dev(Complex got, Complex want) {
    return std::abs(got - want) / std::abs(want);
}

// |i hbar df/dt + (hbar^2/2m) d2f/dx2| relative to the kinetic term,
// via five-point stencils. Truncation stays ~1e-7 for phase gradients
// around 200 at these steps.
double schrodinger_residual(const std::function<Complex(double, double)>& f,
                            double x, double t) {
    const double hx = 1e-4, ht = 1e-6;
    Complex fxx = (-f(x + 2 * hx, t) + 16.0 * f(x + hx, t) - 30.0 * f(x, t) +
                   16.0 * f(x - hx, t) - f(x - 2 * hx, t)) /
                  (12.0 * hx * hx);
    Complex ft = (-f(x, t + 2 * ht) + 8.0 * f(x, t + ht) -
                  8.0 * f(x, t - ht) + f(x, t - 2 * ht)) /
                 (12.0 * ht);
    Complex kinetic = pc.hbar * pc.hbar / (2.0 * pc.mass) * fxx;
    Complex res = Complex(0.0, pc.hbar) * ft + kinetic;
    return std::abs(res) / std::abs(kinetic);
}

} // namespace

TEST_CASE("closed forms solve the free evolution equation") {
    auto moshinsky = [](double x, double t) {
        return hfk::moshinsky_propagator(x, 0.0, t, 8.0, 0.04, pc);
    };
    CHECK(schrodinger_residual(moshinsky, 10.0, 0.05) < 1e-5);
    CHECK(schrodinger_residual(moshinsky, 9.2, 0.05) < 1e-5);

    auto shutter = [](double x, double t) {
        return hfk::opening_shutter_propagator(x, 0.0, t, 8.0, 0.01, pc);
    };
    CHECK(schrodinger_residual(shutter, 10.0, 0.05) < 1e-5);

    auto packet = [](double x, double t) {
        return hfk::free_gaussian_1d({0.0, 200.0, 0.1}, x, t, pc);
    };
    CHECK(schrodinger_residual(packet, 10.3, 0.05) < 1e-5);
}

TEST_CASE("kernel advances the packet like direct evolution") {
    // int K(x - y; t - s) psi(y, s) dy = psi(x, t)
    const hfk::GaussianPacket1D p{0.0, 200.0, 0.1};
    const double s = 0.02, t = 0.05, x = 10.5;
    auto mid = hfk::free_factors(p, s, pc);
    double half = 2.0; // ~9 mid-time widths

    hfk::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-10;
    auto r = hfk::integrate_complex(
        [&](double y) {
            return hfk::free_propagator_1d(x - y, t - s, pc) *
                   hfk::free_gaussian_1d(p, y, s, pc);
        },
        mid.Q_t - half, mid.Q_t + half, spec);
    CHECK(r.tolerance_met);
    CHECK(rel_dev(r.value, hfk::free_gaussian_1d(p, x, t, pc)) < 1e-9);
}

TEST_CASE("packet density peak after drift") {
    const hfk::GaussianPacket1D p{0.0, 200.0, 0.1};
    double peak = std::norm(hfk::free_gaussian_1d(p, 10.0, 0.05, pc));
    CHECK(peak ==
          doctest::Approx(refval::gaussian_peak_density).epsilon(1e-13));
}

TEST_CASE("packet initial state and drift factors") {
    const hfk::GaussianPacket1D p{1.3, -7.0, 0.4};
    for (double x : {1.3, 0.9, 2.4}) {
        Complex got = hfk::free_gaussian_1d(p, x, 0.0, pc);
        double dx = x - p.Q;
        Complex want = std::pow(hfk::pi * p.sigma * p.sigma, -0.25) *
                       std::exp(Complex(-dx * dx / (2.0 * p.sigma * p.sigma),
                                        p.P * dx / pc.hbar));
        CHECK(rel_dev(got, want) < 1e-14);
    }

    auto f = hfk::free_factors(p, 0.7, pc);
    CHECK(f.Q_t == doctest::Approx(p.Q + p.P * 0.7).epsilon(1e-15));
    CHECK(f.gamma_t.real() == 1.0);
    CHECK(f.gamma_t.imag() ==
          doctest::Approx(0.7 / (p.sigma * p.sigma)).epsilon(1e-15));
}

TEST_CASE("free evolution conserves the norm") {
    const hfk::GaussianPacket1D p{0.0, 200.0, 0.1};
    hfk::QuadratureSpec spec;
    spec.abs_tol = 1e-14;
    spec.rel_tol = 1e-12;
    for (double t : {0.0, 0.05}) {
        auto f = hfk::free_factors(p, t, pc);
        double w = 8.0 * p.sigma * std::abs(f.gamma_t);
        auto r = hfk::integrate_complex(
            [&](double x) {
                return Complex(std::norm(hfk::free_gaussian_1d(p, x, t, pc)),
                               0.0);
            },
            f.Q_t - w, f.Q_t + w, spec);
        CHECK(r.tolerance_met);
        CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-11));
    }
}

TEST_CASE("packet and constants validation") {
    CHECK_THROWS_AS((hfk::GaussianPacket1D{0.0, 0.0, 0.0}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((hfk::GaussianPacket2D{{0, 0}, {0, 0}, {1.0, -1.0}}.validate()),
                    std::invalid_argument);
    hfk::PhysicalConstants bad;
    bad.mass = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("2d packet is a product of its axes") {
    hfk::GaussianPacket2D p;
    p.Q = {0.0, -0.3};
    p.P = {200.0, 12.0};
    p.sigma = {0.1, 0.2};
    Complex v2 = hfk::free_gaussian_2d(p, 10.1, 0.4, 0.05, pc);
    Complex prod = hfk::free_gaussian_1d(p.axis(0), 10.1, 0.05, pc) *
                   hfk::free_gaussian_1d(p.axis(1), 0.4, 0.05, pc);
    CHECK(v2.real() == prod.real());
    CHECK(v2.imag() == prod.imag());
}

TEST_CASE("transmission catalog stays within [0, 1] and transmits its edges") {
    // exactly representable parameters so the edge probes are unambiguous
    const double t0 = 0.5, eps = 0.125, delta = 0.25, tau = 0.5;

    auto open = hfk::chi_open();
    CHECK(open(0.0, 0.123) == 1.0);
    CHECK(open(-4.0, 9.0) == 1.0);

    auto mo = hfk::chi_moshinsky_open(t0);
    CHECK(mo(0.0, t0) == 1.0);
    CHECK(mo(0.0, t0 - 1e-12) == 0.0);
    CHECK(mo(0.0, 2.0) == 1.0);

    auto cl = hfk::chi_close_at(t0);
    CHECK(cl(0.0, t0) == 1.0);
    CHECK(cl(0.0, t0 + 1e-12) == 0.0);
    CHECK(cl(0.0, 0.1) == 1.0);

    auto win = hfk::chi_window(t0, eps);
    CHECK(win(0.0, t0 - eps) == 1.0);
    CHECK(win(0.0, t0 + eps) == 1.0);
    CHECK(win(0.0, t0) == 1.0);
    CHECK(win(0.0, t0 - eps - 1e-9) == 0.0);
    CHECK(win(0.0, t0 + eps + 1e-9) == 0.0);

    auto eo = hfk::chi_exp_opening(tau);
    CHECK(eo(0.0, 1.0) == doctest::Approx(std::exp(-tau)).epsilon(1e-15));
    CHECK(eo(0.0, 0.0) == 0.0);
    CHECK(eo(0.0, 1e-9) < 1e-200);

    auto sl = hfk::chi_slit(delta);
    CHECK(sl(delta, 0.1) == 1.0);
    CHECK(sl(-delta, 0.1) == 1.0);
    CHECK(sl(delta + 1e-9, 0.1) == 0.0);
    CHECK(sl(0.0, 99.0) == 1.0);

    auto sw = hfk::chi_slit_window(delta, t0, eps);
    CHECK(sw(delta, t0 + eps) == 1.0);
    CHECK(sw(0.0, t0 + eps + 1e-9) == 0.0);
    CHECK(sw(delta + 1e-9, t0) == 0.0);

    auto el = hfk::chi_ellipse(delta, eps, t0);
    CHECK(el(0.0, t0) == 1.0);
    CHECK(el(delta, t0) == 1.0);
    CHECK(el(0.0, t0 + eps) == 1.0);
    CHECK(el(delta, t0 + eps) == 0.0);

    // range sweep
    for (const auto& name : hfk::aperture_names()) {
        std::map<std::string, double> params;
        if (name == "moshinsky_open" || name == "close_at") params = {{"t0", t0}};
        if (name == "window") params = {{"t0", t0}, {"eps", eps}};
        if (name == "exp_opening") params = {{"tau", tau}};
        if (name == "slit") params = {{"delta", delta}};
        if (name == "slit_window")
            params = {{"delta", delta}, {"t0", t0}, {"eps", eps}};
        if (name == "ellipse")
            params = {{"delta", delta}, {"eps", eps}, {"t0", t0}};
        auto a = hfk::chi_library(name, params);
        CHECK(a.name == name);
        for (double q1 : {-0.3, 0.0, 0.2})
            for (double t1 : {0.01, 0.45, 0.5, 0.62, 1.0}) {
                double v = a(q1, t1);
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
            }
    }
    CHECK(hfk::aperture_names().size() == 8);
}

TEST_CASE("sharp spatial support intervals") {
    const double t0 = 0.5, eps = 0.125, delta = 0.25;

    auto sl = hfk::chi_slit(delta);
    auto iv = sl.space_interval(0.3);
    CHECK(iv[0] == -delta);
    CHECK(iv[1] == delta);

    auto sw = hfk::chi_slit_window(delta, t0, eps);
    auto in = sw.space_interval(t0);
    CHECK(in[0] == -delta);
    CHECK(in[1] == delta);
    auto out = sw.space_interval(t0 + 2.0 * eps);
    CHECK(out[0] > out[1]); // empty

    auto el = hfk::chi_ellipse(delta, eps, t0);
    auto mid = el.space_interval(t0);
    CHECK(mid[0] == -delta);
    CHECK(mid[1] == delta);
    auto shrunk = el.space_interval(t0 + 0.6 * eps);
    CHECK(shrunk[1] == doctest::Approx(delta * 0.8).epsilon(1e-12));
    CHECK(el.space_interval(t0 + 1.5 * eps)[0] >
          el.space_interval(t0 + 1.5 * eps)[1]);
}

TEST_CASE("aperture factory names its offenders") {
    CHECK_THROWS_WITH_AS(hfk::chi_library("vortex", {}),
                         doctest::Contains("vortex"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(hfk::chi_library("window", {{"t0", 0.04}}),
                         doctest::Contains("eps"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(hfk::chi_library("open", {{"t0", 1.0}}),
                         doctest::Contains("t0"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(hfk::chi_library("window", {{"t0", 0.04}, {"eps", -1.0}}),
                         doctest::Contains("eps"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(hfk::chi_library("slit", {{"delta", 0.0}}),
                         doctest::Contains("delta"), std::invalid_argument);
}

TEST_CASE("screen curve and signed surface agree") {
    for (double alpha : {-0.3, 0.0, 0.3}) {
        hfk::Screen2D sc{8.0, alpha};
        CHECK(hfk::screen_curve_residual(sc, -2.0, 2.0, 101) <= 1e-14);
        for (double y : {-1.7, 0.0, 0.9}) {
            auto g = sc.grad_s(sc.curve(y)[0], y);
            const double h = 1e-6;
            double dy = (sc.s(sc.curve(y)[0], y + h) -
                         sc.s(sc.curve(y)[0], y - h)) /
                        (2.0 * h);
            CHECK(g[0] == 1.0);
            CHECK(std::abs(g[1] - dy) <= 1e-8 * (1.0 + std::abs(dy)));
        }
    }
}
