#pragma once
#include <variant>

#include "hfk/aperture.hpp"
#include "hfk/packets.hpp"
#include "hfk/quadrature.hpp"
#include "hfk/screens.hpp"
#include "hfk/types.hpp"

namespace hfk {

struct EvalResult {
    Complex value{0.0, 0.0};
    double err_estimate = 0.0;
    bool tolerance_met = true;
    long evaluations = 0;
};

// One observation point behind a 1D point shutter. xp_or_packet selects the
// mode: a plain double is an exact point source (propagator), a packet is
// the leading-order wave-function construction.
struct HfkRequest1D {
    double x = 0.0;
    std::variant<double, GaussianPacket1D> xp_or_packet = 0.0;
    double t = 0.0;
    Screen1D screen;
    Aperture aperture;
    QuadratureSpec quad;
    PhysicalConstants constants;
};

// Time quadrature of u * K_fr * chi * K_fr over (0, t). The endpoints carry
// essential oscillation exp(i a / t1) and exp(i b / (t - t1)); whenever the
// aperture support touches an endpoint the integral there is summed over
// half-period cells with series acceleration instead of being bisected.
EvalResult hfk_propagator_1d_eval(const HfkRequest1D& req);
Complex hfk_propagator_1d(const HfkRequest1D& req);

// Same construction with the second kernel replaced by the freely evolving
// packet at the shutter.
EvalResult hfk_wavefunction_1d_eval(const HfkRequest1D& req);
Complex hfk_wavefunction_1d(const HfkRequest1D& req);

} // namespace hfk
