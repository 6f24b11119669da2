#include <benchmark/benchmark.h>

#include "trisurf/constants.hpp"
#include "trisurf/cycles.hpp"
#include "trisurf/periods.hpp"

namespace {

// The α, β, γ constants by their closed forms plus quadrature cross-check.
void BM_LatticeConstants(benchmark::State& state) {
    for (auto _ : state) {
        auto c = trisurf::lattice_constants();
        benchmark::DoNotOptimize(c.alpha);
    }
}
BENCHMARK(BM_LatticeConstants);

// One period component over the base cycle: arc-wise sheet continuation
// plus singular-endpoint quadrature.
void BM_PeriodComponent(benchmark::State& state) {
    const trisurf::CyclePath cycle = trisurf::cycle_A1();
    for (auto _ : state) {
        auto p = trisurf::period_numeric(cycle, 0);
        benchmark::DoNotOptimize(p.value);
    }
}
BENCHMARK(BM_PeriodComponent);

// All four components over the base cycle.
void BM_PeriodVector(benchmark::State& state) {
    const trisurf::CyclePath cycle = trisurf::cycle_A1();
    for (auto _ : state) {
        auto v = trisurf::period_vector_numeric(cycle);
        benchmark::DoNotOptimize(v[3].value);
    }
}
BENCHMARK(BM_PeriodVector);

// The full 4×20 matrix, numeric vs symbolic transport, serial and threaded.
void BM_PeriodMatrix(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto pm = trisurf::assemble_period_matrix({}, 1e-8, jobs);
        benchmark::DoNotOptimize(pm.max_residual);
    }
}
BENCHMARK(BM_PeriodMatrix)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

// The three-route β = √3γ certificate.
void BM_BetaGammaCertificate(benchmark::State& state) {
    for (auto _ : state) {
        auto cert = trisurf::verify_beta_gamma_relation();
        benchmark::DoNotOptimize(cert.relation_residual);
    }
}
BENCHMARK(BM_BetaGammaCertificate);

}  // namespace
