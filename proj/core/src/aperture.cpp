#include "hfk/aperture.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hfk {

namespace {

// Heaviside with the jump point transmitting.
double step(double u) { return u >= 0.0 ? 1.0 : 0.0; }

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) {
        std::ostringstream os;
        os << "aperture: " << what << " must be > 0, got " << v;
        throw std::invalid_argument(os.str());
    }
}

constexpr std::array<double, 2> kEmptyInterval{1.0, -1.0};

} // namespace

Aperture chi_open() {
    Aperture a;
    a.chi = [](double, double) { return 1.0; };
    a.name = "open";
    return a;
}

Aperture chi_moshinsky_open(double t0) {
    require_positive(t0, "t0");
    Aperture a;
    a.chi = [t0](double, double t1) { return step(t1 - t0); };
    a.time_breakpoints = {t0};
    a.time_support_lo = t0;
    a.name = "moshinsky_open";
    return a;
}

Aperture chi_close_at(double t0) {
    require_positive(t0, "t0");
    Aperture a;
    a.chi = [t0](double, double t1) { return step(t0 - t1); };
    a.time_breakpoints = {t0};
    a.time_support_hi = t0;
    a.name = "close_at";
    return a;
}

Aperture chi_window(double t0, double eps) {
    require_positive(t0, "t0");
    require_positive(eps, "eps");
    Aperture a;
    a.chi = [t0, eps](double, double t1) { return step(1.0 - std::abs(t1 - t0) / eps); };
    a.time_breakpoints = {t0 - eps, t0 + eps};
    a.time_support_lo = std::max(0.0, t0 - eps);
    a.time_support_hi = t0 + eps;
    a.name = "window";
    return a;
}

Aperture chi_exp_opening(double tau) {
    require_positive(tau, "tau");
    Aperture a;
    a.chi = [tau](double, double t1) { return t1 > 0.0 ? std::exp(-tau / t1) : 0.0; };
    a.name = "exp_opening";
    return a;
}

Aperture chi_slit(double delta) {
    require_positive(delta, "delta");
    Aperture a;
    a.chi = [delta](double q1, double) { return step(1.0 - std::abs(q1) / delta); };
    a.space_breakpoints = {-delta, delta};
    a.space_support_lo = -delta;
    a.space_support_hi = delta;
    a.space_interval = [delta](double) { return std::array<double, 2>{-delta, delta}; };
    a.name = "slit";
    return a;
}

Aperture chi_slit_window(double delta, double t0, double eps) {
    require_positive(delta, "delta");
    require_positive(t0, "t0");
    require_positive(eps, "eps");
    Aperture a;
    a.chi = [delta, t0, eps](double q1, double t1) {
        return step(1.0 - std::abs(q1) / delta) * step(1.0 - std::abs(t1 - t0) / eps);
    };
    a.time_breakpoints = {t0 - eps, t0 + eps};
    a.space_breakpoints = {-delta, delta};
    a.time_support_lo = std::max(0.0, t0 - eps);
    a.time_support_hi = t0 + eps;
    a.space_support_lo = -delta;
    a.space_support_hi = delta;
    a.space_interval = [delta, t0, eps](double t1) {
        if (std::abs(t1 - t0) > eps) return kEmptyInterval;
        return std::array<double, 2>{-delta, delta};
    };
    a.name = "slit_window";
    return a;
}

Aperture chi_ellipse(double delta, double eps, double t0) {
    require_positive(delta, "delta");
    require_positive(eps, "eps");
    require_positive(t0, "t0");
    Aperture a;
    a.chi = [delta, eps, t0](double q1, double t1) {
        double u = (t1 - t0) / eps;
        double w = q1 / delta;
        return step(1.0 - w * w - u * u);
    };
    a.time_breakpoints = {t0 - eps, t0, t0 + eps};
    a.space_breakpoints = {-delta, 0.0, delta};
    a.time_support_lo = std::max(0.0, t0 - eps);
    a.time_support_hi = t0 + eps;
    a.space_support_lo = -delta;
    a.space_support_hi = delta;
    a.space_interval = [delta, eps, t0](double t1) {
        double u = (t1 - t0) / eps;
        double disc = 1.0 - u * u;
        if (disc < 0.0) return kEmptyInterval;
        double h = delta * std::sqrt(disc);
        return std::array<double, 2>{-h, h};
    };
    a.name = "ellipse";
    return a;
}

namespace {

double need(const std::map<std::string, double>& params, const char* key,
            const std::string& name) {
    auto it = params.find(key);
    if (it == params.end()) {
        std::ostringstream os;
        os << "aperture '" << name << "': missing parameter '" << key << "'";
        throw std::invalid_argument(os.str());
    }
    return it->second;
}

void reject_surplus(const std::map<std::string, double>& params,
                    std::initializer_list<const char*> allowed,
                    const std::string& name) {
    for (const auto& [key, value] : params) {
        bool ok = std::any_of(allowed.begin(), allowed.end(),
                              [&key](const char* a) { return key == a; });
        if (!ok) {
            std::ostringstream os;
            os << "aperture '" << name << "': unknown parameter '" << key << "'";
            throw std::invalid_argument(os.str());
        }
    }
}

} // namespace

const std::vector<std::string>& aperture_names() {
    static const std::vector<std::string> names = {
        "open",    "moshinsky_open", "close_at",    "window",
        "exp_opening", "slit",       "slit_window", "ellipse"};
    return names;
}

Aperture chi_library(const std::string& name,
                     const std::map<std::string, double>& params) {
    if (name == "open") {
        reject_surplus(params, {}, name);
        return chi_open();
    }
    if (name == "moshinsky_open") {
        reject_surplus(params, {"t0"}, name);
        return chi_moshinsky_open(need(params, "t0", name));
    }
    if (name == "close_at") {
        reject_surplus(params, {"t0"}, name);
        return chi_close_at(need(params, "t0", name));
    }
    if (name == "window") {
        reject_surplus(params, {"t0", "eps"}, name);
        return chi_window(need(params, "t0", name), need(params, "eps", name));
    }
    if (name == "exp_opening") {
        reject_surplus(params, {"tau"}, name);
        return chi_exp_opening(need(params, "tau", name));
    }
    if (name == "slit") {
        reject_surplus(params, {"delta"}, name);
        return chi_slit(need(params, "delta", name));
    }
    if (name == "slit_window") {
        reject_surplus(params, {"delta", "t0", "eps"}, name);
        return chi_slit_window(need(params, "delta", name), need(params, "t0", name),
                               need(params, "eps", name));
    }
    if (name == "ellipse") {
        reject_surplus(params, {"delta", "eps", "t0"}, name);
        return chi_ellipse(need(params, "delta", name), need(params, "eps", name),
                           need(params, "t0", name));
    }
    std::ostringstream os;
    os << "aperture: unknown name '" << name << "' (expected one of:";
    for (const auto& n : aperture_names()) os << ' ' << n;
    os << ')';
    throw std::invalid_argument(os.str());
}

} // namespace hfk
