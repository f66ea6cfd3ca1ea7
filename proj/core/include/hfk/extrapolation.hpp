#pragma once
#include "hfk/types.hpp"
#include <vector>

namespace hfk {

// Wynn epsilon acceleration for complex partial-sum sequences. The cell
// chains feed it partial sums whose terms alternate in phase by ~pi and
// decay algebraically; the even epsilon columns then converge to the limit
// far faster than the sums themselves.
class WynnEpsilon {
public:
    void append(Complex partial_sum);

    Complex limit() const { return best_; }
    double err_estimate() const { return err_; }
    int count() const { return n_; }
    // true once successive extrapolants differ only at rounding level
    bool saturated() const { return saturated_; }

private:
    std::vector<Complex> diag_;
    Complex best_{0.0, 0.0};
    Complex hist1_{0.0, 0.0}, hist2_{0.0, 0.0};
    double err_ = 1e300;
    int n_ = 0;
    bool saturated_ = false;
};

} // namespace hfk
