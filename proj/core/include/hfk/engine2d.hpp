#pragma once
#include <array>
#include <variant>

#include "hfk/aperture.hpp"
#include "hfk/engine1d.hpp"
#include "hfk/packets.hpp"
#include "hfk/quadrature.hpp"
#include "hfk/screens.hpp"

namespace hfk {

// One observation point behind a parabolic screen with a space-time aperture.
// The source is either an exact point (propagator) or a Gaussian packet
// (leading-order wave function). y_window truncates the curve parameter;
// 0 selects an automatic width from the packet spread and aperture size.
struct HfkRequest2D {
    std::array<double, 2> q{0.0, 0.0};
    std::variant<std::array<double, 2>, GaussianPacket2D> source =
        std::array<double, 2>{0.0, 0.0};
    double t = 0.0;
    Screen2D screen;
    Aperture aperture;
    QuadratureSpec quad;
    double y_window = 0.0;
    PhysicalConstants constants;
};

struct VisibilityReport {
    bool ok = true;
    int samples = 0;
    int flagged = 0;              // sight lines re-crossing the screen
    double shadowed_weight = 0.0; // packet-weighted share of flagged samples
};

// Samples sight lines source -> q1(y1) -> q and measures how much of the
// source-weighted aperture is blocked by another part of the screen. The
// engines do not reject on this themselves: a concave screen always shadows
// its own far rim where the packet weight is already negligible. Callers
// decide what weight is acceptable.
VisibilityReport check_visibility(const HfkRequest2D& req);

// Line-integral reduction of the surface construction: the curve measure and
// |grad s| cancel, leaving weight (v . grad s) along q1(y1).
EvalResult hfk_wavefunction_2d_eval(const HfkRequest2D& req);
Complex hfk_wavefunction_2d(const HfkRequest2D& req);

EvalResult hfk_propagator_2d_eval(const HfkRequest2D& req);
Complex hfk_propagator_2d(const HfkRequest2D& req);

// Point-source convenience form.
Complex hfk_propagator_2d(const std::array<double, 2>& q,
                          const std::array<double, 2>& qp, double t,
                          const Screen2D& screen, const Aperture& aperture,
                          const QuadratureSpec& quad = {});

} // namespace hfk
