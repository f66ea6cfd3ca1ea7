#include "hfk/extrapolation.hpp"
#include <cmath>

namespace hfk {

void WynnEpsilon::append(Complex s) {
    // Build the next diagonal of the epsilon table from the previous one:
    //   eps[k](new) = eps[k-2](old) + 1 / (eps[k-1](new) - eps[k-1](old)),
    // with eps[-1] = 0. Even columns estimate the limit.
    std::vector<Complex> nd(diag_.size() + 1);
    nd[0] = s;
    bool exact = false;
    std::size_t filled = nd.size();
    for (std::size_t k = 1; k < nd.size(); ++k) {
        const Complex d = nd[k - 1] - diag_[k - 1];
        const double scale = std::abs(nd[k - 1]) + std::abs(diag_[k - 1]);
        if (std::abs(d) <= 1e-15 * scale || std::abs(d) < 1e-300) {
            // difference at rounding level: the column has converged
            best_ = nd[k - 1];
            exact = true;
            filled = k;
            break;
        }
        nd[k] = (k >= 2 ? diag_[k - 2] : Complex(0.0)) + 1.0 / d;
    }
    nd.resize(filled);
    // Cap the extrapolation depth. Column k depends only on columns <= k of
    // earlier diagonals, so dropping the deepest columns keeps the retained
    // part of the table exact while every column still updates per append.
    if (nd.size() > 60) nd.resize(60);
    diag_ = std::move(nd);
    ++n_;

    if (!exact) {
        std::size_t k = diag_.size() - 1;
        if (k % 2 != 0)
            --k;                       // last even column
        best_ = diag_[k];
    }

    err_ = std::abs(best_ - hist1_) + 0.5 * std::abs(hist1_ - hist2_);
    const double floor = 8e-16 * std::abs(best_);
    if (err_ < floor)
        err_ = floor;
    if (exact)
        err_ = std::min(err_, 1e-15 * (std::abs(best_) + 1e-300));
    saturated_ = exact || (n_ > 3 && err_ <= 4e-15 * std::abs(best_));
    hist2_ = hist1_;
    hist1_ = best_;
}

} // namespace hfk
