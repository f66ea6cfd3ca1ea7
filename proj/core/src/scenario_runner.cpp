#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

#include "hfk/engine1d.hpp"
#include "hfk/engine2d.hpp"
#include "hfk/scenario.hpp"

namespace hfk {

namespace {

struct PointOutcome {
    double psi_sq = 0.0;
    double err = 0.0;
};

PointOutcome from_eval(const EvalResult& e) {
    PointOutcome p;
    double mag = std::abs(e.value);
    p.psi_sq = mag * mag;
    // first-order propagation of the amplitude error onto the density
    p.err = e.tolerance_met ? (2.0 * mag + e.err_estimate) * e.err_estimate : -1.0;
    return p;
}

} // namespace

ScenarioResult run_scenario(const ScenarioConfig& cfg, int workers) {
    cfg.validate();

    ScenarioResult r;
    r.config = cfg;
    r.xs = cfg.x.points();
    if (cfg.dimension == 2) r.ys = cfg.y.points();
    r.sigma_over_L = cfg.sigma_over_L();
    if (!(r.sigma_over_L <= 0.05)) {
        std::ostringstream w;
        w << "sigma/L = " << r.sigma_over_L
          << " exceeds 0.05; the leading-order packet approximation degrades";
        r.warnings.push_back(w.str());
    }

    const long nx = static_cast<long>(r.xs.size());
    const long ny = cfg.dimension == 2 ? static_cast<long>(r.ys.size()) : 1;
    const long npts = nx * ny;
    r.psi_sq.assign(static_cast<size_t>(npts), 0.0);
    r.err.assign(static_cast<size_t>(npts), 0.0);

    const Aperture aperture = cfg.make_aperture();

    auto eval_point = [&](long idx) {
        PointOutcome p;
        try {
            if (cfg.dimension == 1) {
                HfkRequest1D req;
                req.x = r.xs[static_cast<size_t>(idx)];
                req.xp_or_packet = cfg.packet1;
                req.t = cfg.t;
                req.screen = {cfg.d};
                req.aperture = aperture;
                req.quad = cfg.quad;
                req.constants = cfg.constants;
                p = from_eval(hfk_wavefunction_1d_eval(req));
            } else {
                HfkRequest2D req;
                req.q = {r.xs[static_cast<size_t>(idx / ny)],
                         r.ys[static_cast<size_t>(idx % ny)]};
                req.source = cfg.packet2;
                req.t = cfg.t;
                req.screen = {cfg.d, cfg.alpha};
                req.aperture = aperture;
                req.quad = cfg.quad;
                req.y_window = cfg.y_window;
                req.constants = cfg.constants;
                p = from_eval(hfk_wavefunction_2d_eval(req));
            }
        } catch (const std::domain_error&) {
            p = {0.0, -2.0};
        } catch (const std::invalid_argument&) {
            p = {0.0, -2.0};
        } catch (const std::exception&) {
            p = {0.0, -3.0};
        }
        r.psi_sq[static_cast<size_t>(idx)] = p.psi_sq;
        r.err[static_cast<size_t>(idx)] = p.err;
    };

    auto start = std::chrono::steady_clock::now();
    long w = std::clamp<long>(workers, 1, std::max<long>(1, npts));
    if (w == 1) {
        for (long i = 0; i < npts; ++i) eval_point(i);
    } else {
        // Static contiguous chunks; every point writes only its own slot, so
        // the result is independent of the partition.
        const long chunk = (npts + w - 1) / w;
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<size_t>(w));
        for (long k = 0; k < w; ++k) {
            const long lo = k * chunk;
            const long hi = std::min(npts, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (long i = lo; i < hi; ++i) eval_point(i);
            });
        }
        pool.clear(); // join
    }
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    r.failed_points = std::count_if(r.err.begin(), r.err.end(),
                                    [](double e) { return e < 0.0; });
    return r;
}

} // namespace hfk
