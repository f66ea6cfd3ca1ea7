#pragma once
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "hfk/types.hpp"

namespace hfk {

// Transmission coefficient chi(q1, t1) in [0, 1] together with the metadata
// adaptive quadrature needs: jump locations per axis and outer support
// bounds (chi vanishes identically outside the support box).
//
// q1 is the screen curve parameter (y1 in 2D); time-only apertures ignore it.
// Heaviside jumps include the boundary: chi is 1 at the edge of its support.
struct Aperture {
    std::function<double(double q1, double t1)> chi;
    std::vector<double> time_breakpoints;
    std::vector<double> space_breakpoints;
    double time_support_lo = 0.0;
    double time_support_hi = std::numeric_limits<double>::infinity();
    double space_support_lo = -std::numeric_limits<double>::infinity();
    double space_support_hi = std::numeric_limits<double>::infinity();
    // Optional sharp spatial support at fixed t1, as {lo, hi} with lo > hi
    // meaning empty. When set, the interior of the interval is jump-free,
    // so inner integrals can use it instead of chasing the jump adaptively.
    std::function<std::array<double, 2>(double t1)> space_interval;
    std::string name = "custom";

    double operator()(double q1, double t1) const { return chi(q1, t1); }
};

Aperture chi_open();
Aperture chi_moshinsky_open(double t0);
Aperture chi_close_at(double t0);
Aperture chi_window(double t0, double eps);
Aperture chi_exp_opening(double tau);
Aperture chi_slit(double delta);
Aperture chi_slit_window(double delta, double t0, double eps);
Aperture chi_ellipse(double delta, double eps, double t0);

// Dispatch by name with named parameters (t0, eps, delta, tau as the
// variant requires). Unknown names and missing/surplus/invalid parameters
// throw invalid_argument with a message naming the offender.
Aperture chi_library(const std::string& name,
                     const std::map<std::string, double>& params);

// Names accepted by chi_library, in catalog order.
const std::vector<std::string>& aperture_names();

} // namespace hfk
