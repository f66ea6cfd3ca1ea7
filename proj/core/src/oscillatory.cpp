#include "hfk/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace hfk {

namespace {

constexpr double kTiny = 1e-300;

} // namespace

ChainResult integrate_cell_chain(const Integrand& f,
                                 const std::function<double(int)>& boundary,
                                 double abs_target, int max_cells) {
    ChainResult out;
    double prev = boundary(0);
    if (!std::isfinite(prev)) {
        out.converged = false;
        return out;
    }

    WynnEpsilon eps;
    Complex partial{0.0, 0.0};
    double gk_err = 0.0;
    double small_thresh = std::max(abs_target / 16.0, kTiny);
    int consecutive_small = 0;
    double last_mag[3] = {0.0, 0.0, 0.0};

    for (int k = 0; k < max_cells; ++k) {
        double next = boundary(k + 1);
        if (!std::isfinite(next) || next == prev) {
            // Boundary generator gave up; settle for what the table has.
            out.value = eps.count() > 3 ? eps.limit() : partial;
            out.err_estimate = gk_err + eps.err_estimate();
            out.converged = out.err_estimate <= abs_target;
            return out;
        }
        double lo = std::min(prev, next);
        double hi = std::max(prev, next);
        double cell_err = 0.0;
        Complex v = gk15_panel(f, lo, hi, cell_err, out.evaluations);
        prev = next;
        ++out.cells;
        partial += v;
        gk_err += cell_err;
        eps.append(partial);

        double mag = std::abs(v);
        last_mag[k % 3] = mag;
        consecutive_small = (mag <= small_thresh) ? consecutive_small + 1 : 0;
        if (consecutive_small >= 3) {
            double tail = 4.0 * std::max({last_mag[0], last_mag[1], last_mag[2]});
            out.value = partial;
            out.err_estimate = gk_err + tail;
            out.converged = out.err_estimate <= abs_target;
            return out;
        }
        if (k >= 5) {
            double ee = eps.err_estimate();
            if (ee + gk_err <= abs_target) {
                out.value = eps.limit();
                out.err_estimate = ee + gk_err;
                out.converged = true;
                return out;
            }
            // Once the accelerated limit stops moving at the rounding floor,
            // further cells only pile up quadrature noise in gk_err.
            if (k >= 8 && eps.saturated()) {
                out.value = eps.limit();
                out.err_estimate = ee + gk_err;
                out.converged = out.err_estimate <= abs_target;
                return out;
            }
        }
    }

    out.value = eps.count() > 3 ? eps.limit() : partial;
    out.err_estimate = eps.err_estimate() + gk_err;
    out.converged = out.err_estimate <= abs_target;
    return out;
}

std::function<double(int)> inverse_phase_boundaries(double phase_coeff, double s_edge) {
    double theta0 = phase_coeff / s_edge;
    return [phase_coeff, theta0](int k) {
        return phase_coeff / (theta0 + pi * static_cast<double>(k));
    };
}

ChainResult integrate_inverse_phase_edge(const Integrand& f, double phase_coeff,
                                         double s_edge, double abs_target,
                                         int max_cells) {
    return integrate_cell_chain(f, inverse_phase_boundaries(phase_coeff, s_edge),
                                abs_target, max_cells);
}

std::function<double(int)> quadratic_wing_boundaries(double C, double ystar,
                                                     double y0, int direction) {
    double phi0 = C * (y0 - ystar) * (y0 - ystar);
    double dir = direction >= 0 ? 1.0 : -1.0;
    return [C, ystar, phi0, dir](int k) {
        double level = phi0 + pi * static_cast<double>(k);
        return ystar + dir * std::sqrt(level / C);
    };
}

std::function<double(int)> monotone_phase_boundaries(std::function<double(double)> phase,
                                                     double y0, int direction) {
    struct State {
        std::function<double(double)> phase;
        double y0;
        double y_prev;
        double phi0;
        double dir;
        double step_guess;
        int k_prev = 0;
    };
    auto st = std::make_shared<State>();
    st->phase = std::move(phase);
    st->y0 = y0;
    st->y_prev = y0;
    st->phi0 = st->phase(y0);
    st->dir = direction >= 0 ? 1.0 : -1.0;

    double h = 1e-4 * (1.0 + std::abs(y0));
    double slope = (st->phase(y0 + st->dir * h) - st->phi0) / h;
    st->step_guess = (std::isfinite(slope) && slope > 0.0)
                         ? std::clamp(pi / slope, 1e-8 * (1.0 + std::abs(y0)),
                                      1e3 * (1.0 + std::abs(y0)))
                         : 0.1 * (1.0 + std::abs(y0));

    return [st](int k) -> double {
        double nan = std::numeric_limits<double>::quiet_NaN();
        if (k == 0) return st->y0;
        if (k != st->k_prev + 1) return nan; // sequential access only
        double target = st->phi0 + pi * static_cast<double>(k);
        double step = st->step_guess;
        double cap = 1e12 * (1.0 + std::abs(st->y_prev));
        double p;
        while (true) {
            p = st->phase(st->y_prev + st->dir * step);
            if (!std::isfinite(p)) return nan;
            if (p >= target) break;
            step *= 2.0;
            if (step > cap) return nan; // phase stopped growing: not a valid wing
        }
        double ulo = 0.0, uhi = step;
        for (int it = 0; it < 200 && uhi - ulo > 1e-15 * (std::abs(st->y_prev) + uhi);
             ++it) {
            double um = 0.5 * (ulo + uhi);
            double pm = st->phase(st->y_prev + st->dir * um);
            if (!std::isfinite(pm)) return nan;
            (pm < target ? ulo : uhi) = um;
        }
        double u = 0.5 * (ulo + uhi);
        st->y_prev += st->dir * u;
        st->step_guess = std::max(u, 1e-14 * (1.0 + std::abs(st->y_prev)));
        st->k_prev = k;
        return st->y_prev;
    };
}

Complex quadratic_phase_tail(Complex f_at_cut, double C, double ystar,
                             double X, int side) {
    double dp = 2.0 * C * (X - ystar); // phase slope at the cut
    Complex series = Complex(0.0, 1.0) / dp + 2.0 * C / (dp * dp * dp);
    double s = side >= 0 ? 1.0 : -1.0;
    return s * f_at_cut * series;
}

} // namespace hfk
