#include <benchmark/benchmark.h>

#include "trisurf/lattice.hpp"

namespace {

// Parse and orientation-check the integer-matrix data file.
void BM_LoadLatticeData(benchmark::State& state) {
    for (auto _ : state) {
        auto data = trisurf::load_lattice_data();
        benchmark::DoNotOptimize(data.g_omega_1(0, 0));
    }
}
BENCHMARK(BM_LoadLatticeData);

// All six reduction identities in exact symbolic arithmetic.
void BM_SixIdentities(benchmark::State& state) {
    const trisurf::LatticeData data = trisurf::load_lattice_data();
    for (auto _ : state) {
        auto ids = trisurf::verify_all_lattice_identities(data);
        benchmark::DoNotOptimize(ids.omega_forward);
    }
}
BENCHMARK(BM_SixIdentities);

// Exhaustive ±1 mutation sweep over all 448 integer entries.
void BM_MutationSweep(benchmark::State& state) {
    const trisurf::LatticeData data = trisurf::load_lattice_data();
    for (auto _ : state) {
        auto sweep = trisurf::mutation_sweep(data);
        benchmark::DoNotOptimize(sweep.detected);
    }
}
BENCHMARK(BM_MutationSweep)->Unit(benchmark::kMillisecond);

// Exact Bareiss rank of one associate-angle matrix.
void BM_AssociateRank(benchmark::State& state) {
    for (auto _ : state) {
        int rank = trisurf::associate_rank(7, 5);
        benchmark::DoNotOptimize(rank);
    }
}
BENCHMARK(BM_AssociateRank);

// The full gcd-reduced sweep |m|, |n| ≤ 20.
void BM_AssociateRankSweep(benchmark::State& state) {
    for (auto _ : state) {
        int rank = trisurf::associate_rank_sweep(20);
        benchmark::DoNotOptimize(rank);
    }
}
BENCHMARK(BM_AssociateRankSweep)->Unit(benchmark::kMillisecond);

}  // namespace
