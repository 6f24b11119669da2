#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "trisurf/curve.hpp"
#include "trisurf/homology.hpp"
#include "trisurf/quadrature.hpp"

namespace {

// Smooth oscillatory path integral, the cheap common case.
void BM_SmoothPathIntegral(benchmark::State& state) {
    const trisurf::ComplexIntegrand f = [](double t) {
        return std::exp(std::complex<double>(0.0, 8.0 * t)) /
               (1.0 + t * t);
    };
    for (auto _ : state) {
        auto r = trisurf::integrate_path(f, 0.0, 1.0, {});
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_SmoothPathIntegral);

// Integrable endpoint singularity t^{-2/3}, the branch-point profile the
// substitution machinery exists for.
void BM_SingularEndpoint(benchmark::State& state) {
    const trisurf::RealIntegrand f = [](double t) {
        return std::pow(t, -2.0 / 3.0) * std::cos(t);
    };
    trisurf::Endpoint left;
    left.singular = true;
    for (auto _ : state) {
        auto r = trisurf::integrate_real(f, 0.0, 1.0, {}, left, {});
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_SingularEndpoint);

// One wedge-density evaluation (all three sheets summed).
void BM_WedgeDensity(benchmark::State& state) {
    std::complex<double> z(0.37, 0.21);
    for (auto _ : state) {
        double d = trisurf::wedge_density(1, 3, z);
        benchmark::DoNotOptimize(d);
        z *= std::complex<double>(0.9999, 1e-5);  // vary the sample point
    }
}
BENCHMARK(BM_WedgeDensity);

// Full folded plane integral of one wedge pairing at a loosened tolerance;
// dominated by the radial profiles near the excised branch disks.
void BM_PlanePairing(benchmark::State& state) {
    trisurf::HomologyOptions options;
    options.quad = {1e-5, 1e-5, 30, -2.0 / 3.0};
    for (auto _ : state) {
        auto r = trisurf::verify_pairing(1, 2, options);
        benchmark::DoNotOptimize(r.integral);
    }
}
BENCHMARK(BM_PlanePairing)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
