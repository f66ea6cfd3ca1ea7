#include "hfk/screens.hpp"

#include <cmath>

namespace hfk {

double screen_curve_residual(const Screen2D& sc, double y_lo, double y_hi, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double y = n == 1 ? y_lo : y_lo + (y_hi - y_lo) * i / (n - 1);
        auto q = sc.curve(y);
        worst = std::max(worst, std::abs(sc.s(q[0], q[1])));
    }
    return worst;
}

} // namespace hfk
