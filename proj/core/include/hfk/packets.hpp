#pragma once
#include <array>

#include "hfk/types.hpp"

namespace hfk {

// Minimal-uncertainty Gaussian at t = 0: center Q, mean momentum P, width sigma.
struct GaussianPacket1D {
    double Q = 0.0;
    double P = 0.0;
    double sigma = 1.0;

    void validate() const {
        if (!(sigma > 0.0))
            throw std::invalid_argument("GaussianPacket1D: sigma must be > 0");
    }
};

// Product of two 1D packets, one per axis.
struct GaussianPacket2D {
    std::array<double, 2> Q{0.0, 0.0};
    std::array<double, 2> P{0.0, 0.0};
    std::array<double, 2> sigma{1.0, 1.0};

    GaussianPacket1D axis(int j) const { return {Q[j], P[j], sigma[j]}; }

    void validate() const {
        if (!(sigma[0] > 0.0) || !(sigma[1] > 0.0))
            throw std::invalid_argument("GaussianPacket2D: sigmas must be > 0");
    }
};

// Drifted center and complex dilation of a freely evolving Gaussian.
struct FreeEvolutionFactors {
    double Q_t;
    Complex gamma_t; // 1 + i hbar t / (m sigma^2); first quadrant for t >= 0
};

FreeEvolutionFactors free_factors(const GaussianPacket1D& p, double t,
                                  const PhysicalConstants& pc);

// Freely evolved packet value at (x, t); t = 0 reproduces the initial state exactly.
Complex free_gaussian_1d(const GaussianPacket1D& p, double x, double t,
                         const PhysicalConstants& pc);

Complex free_gaussian_2d(const GaussianPacket2D& p, double x, double y, double t,
                         const PhysicalConstants& pc);

} // namespace hfk
