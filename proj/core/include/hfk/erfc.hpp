#pragma once
#include "hfk/types.hpp"

namespace hfk {

// Faddeeva function w(z) = exp(-z^2) erfc(-iz), valid for Im(z) >= 0.
Complex faddeeva_w_upper(Complex z);

// Complementary error function, analytically continued to complex argument.
// Relative accuracy ~1e-13 for |z| <= 30. Satisfies erfc(-z) = 2 - erfc(z)
// and erfc(conj z) = conj(erfc z) exactly by construction. Throws
// std::invalid_argument on non-finite input and std::range_error when the
// true value overflows double range (growth sector, |Im z| large); values
// that underflow in the decaying sector are returned as clean zeros.
Complex erfc_complex(Complex z);

} // namespace hfk
