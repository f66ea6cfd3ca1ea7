// Microbenchmarks for the hot paths: special functions, the adaptive
// quadrature core, closed forms, and single-point engine evaluations.
#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "hfk/aperture.hpp"
#include "hfk/engine1d.hpp"
#include "hfk/engine2d.hpp"
#include "hfk/erfc.hpp"
#include "hfk/moshinsky.hpp"
#include "hfk/packets.hpp"
#include "hfk/quadrature.hpp"

namespace {

const hfk::PhysicalConstants pc{};

void BM_ErfcComplex(benchmark::State& state) {
    hfk::Complex z{1.3, -1.3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfk::erfc_complex(z));
    }
}
BENCHMARK(BM_ErfcComplex);

void BM_QuadratureOscillatory(benchmark::State& state) {
    const double k = static_cast<double>(state.range(0));
    auto f = [k](double x) {
        return std::exp(hfk::Complex(0.0, k * x));
    };
    hfk::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-10;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfk::integrate_complex(f, 0.0, 1.0, spec));
    }
}
BENCHMARK(BM_QuadratureOscillatory)->Arg(10)->Arg(200);

void BM_MoshinskyClosedForm(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            hfk::moshinsky_propagator(10.0, 0.0, 0.05, 8.0, 0.04, pc));
    }
}
BENCHMARK(BM_MoshinskyClosedForm);

void BM_Engine1DPoint(benchmark::State& state) {
    hfk::HfkRequest1D req;
    req.x = 10.0;
    req.xp_or_packet = 0.0;
    req.t = 0.05;
    req.screen = {8.0};
    req.aperture = hfk::chi_moshinsky_open(0.04);
    req.quad.abs_tol = 1e-14;
    req.quad.rel_tol = 1e-8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfk::hfk_propagator_1d_eval(req));
    }
}
BENCHMARK(BM_Engine1DPoint);

void BM_Engine1DPacket(benchmark::State& state) {
    hfk::HfkRequest1D req;
    req.x = 10.0;
    req.xp_or_packet = hfk::GaussianPacket1D{0.0, 200.0, 0.1};
    req.t = 0.05;
    req.screen = {8.0};
    req.aperture = hfk::chi_window(0.04, 5e-4);
    req.quad.abs_tol = 1e-10;
    req.quad.rel_tol = 1e-8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfk::hfk_wavefunction_1d_eval(req));
    }
}
BENCHMARK(BM_Engine1DPacket);

void BM_Engine2DPacket(benchmark::State& state) {
    hfk::HfkRequest2D req;
    req.q = {10.0, 0.3};
    hfk::GaussianPacket2D p;
    p.P = {200.0, 0.0};
    p.sigma = {0.1, 0.1};
    req.source = p;
    req.t = 0.05;
    req.screen = {8.0, 0.0};
    req.aperture = hfk::chi_slit(0.05);
    req.quad.abs_tol = 1e-9;
    req.quad.rel_tol = 1e-7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hfk::hfk_wavefunction_2d_eval(req));
    }
}
BENCHMARK(BM_Engine2DPacket);

} // namespace

BENCHMARK_MAIN();
