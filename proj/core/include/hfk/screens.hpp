#pragma once
#include <array>

#include "hfk/types.hpp"

namespace hfk {

// Point shutter on a line: transmission happens only at x = x1.
struct Screen1D {
    double x1 = 0.0;
};

// Parabolic family x1 = d + alpha * y1^2, represented both as a signed
// surface function and as an explicit curve parameterized by y1. The engine
// integrates along the curve; the signed function fixes which side is which
// (s > 0 is the far side).
struct Screen2D {
    double d = 0.0;
    double alpha = 0.0;

    double s(double x1, double y1) const { return x1 - d - alpha * y1 * y1; }

    std::array<double, 2> grad_s(double /*x1*/, double y1) const {
        return {1.0, -2.0 * alpha * y1};
    }

    std::array<double, 2> curve(double y1) const {
        return {d + alpha * y1 * y1, y1};
    }
};

// Largest |s(curve(y1))| over a sampled parameter range; the parameterization
// and the signed function must describe the same set.
double screen_curve_residual(const Screen2D& sc, double y_lo, double y_hi, int n);

} // namespace hfk
