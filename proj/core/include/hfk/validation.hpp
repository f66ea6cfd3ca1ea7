#pragma once
#include <array>
#include <span>
#include <string>
#include <vector>

#include "hfk/types.hpp"

namespace hfk {

struct IdentityReport {
    std::string name;
    int samples = 0;
    double max_rel_dev = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Tuples (xp, x1, x, t) with xp < x1 < x used by the identity suites.
std::span<const std::array<double, 4>> pinned_identity_tuples();

// Time quadrature of the eta-weighted kernel product against the free kernel;
// the identity holds for every complex eta. Empty samples = pinned set.
IdentityReport check_identity_eta(Complex eta,
                                  std::span<const std::array<double, 4>> samples = {});

// Plain kernel-product integral against its erfc closed form.
IdentityReport check_identity_erfc_u(
    std::span<const std::array<double, 4>> samples = {});

// Every invariant suite at pinned samples, in registry order. Failures are
// reported, never thrown.
std::vector<IdentityReport> run_full_validation();

} // namespace hfk
