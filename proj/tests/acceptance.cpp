#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <string>

#include "trisurf/constants.hpp"
#include "trisurf/curve.hpp"
#include "trisurf/cycles.hpp"
#include "trisurf/homology.hpp"
#include "trisurf/lattice.hpp"
#include "trisurf/mesh.hpp"
#include "trisurf/periods.hpp"
#include "trisurf/report.hpp"
#include "trisurf/symmetry.hpp"

/*
 * Acceptance gate: one line per primary criterion, PASS or FAIL, with the
 * measured quantity and its bound. Every check runs at full scale; nothing
 * is skipped or downgraded on failure, and the exit status is zero only if
 * every line passes.
 *
 * Criterion 4 is expected to fail its second half on this data: twelve
 * integer entries multiply identically-zero columns of Ω_R and Ω_I, so no
 * single-entry mutation there can move any identity in the set. The gate
 * prints the exhaustive count and the structural reason instead of
 * weakening the sweep.
 */

namespace {

using trisurf::Matrix;
using trisurf::QSqrt3;

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string sci(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2e", v);
    return buffer;
}

Matrix<QSqrt3> identity4() {
    Matrix<QSqrt3> m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = QSqrt3(1);
    return m;
}

Verdict criterion_beta_gamma() {
    const trisurf::BetaGammaCertificate cert =
        trisurf::verify_beta_gamma_relation();
    return {cert.relation_residual < 1e-10,
            "|beta - sqrt3*gamma|/beta = " + sci(cert.relation_residual) +
                " (< 1e-10)"};
}

Verdict criterion_base_periods() {
    const trisurf::LatticeConstants c = trisurf::lattice_constants();
    double worst = 0.0;
    const auto compare = [&](const trisurf::CyclePath& cycle,
                             const std::array<trisurf::SymbolicScalar, 4>&
                                 closed) {
        const auto numeric = trisurf::period_vector_numeric(cycle);
        for (int k = 0; k < 4; ++k)
            worst = std::max(worst,
                             std::abs(numeric[k].value -
                                      closed[k].embed(c.alpha, c.gamma)));
    };
    compare(trisurf::cycle_A1(), trisurf::a1_period_symbolic());
    compare(trisurf::cycle_A2(), trisurf::a2_period_symbolic());
    return {worst < 1e-8,
            "worst of 8 component deviations = " + sci(worst) + " (< 1e-8)"};
}

Verdict criterion_transport() {
    const trisurf::PeriodMatrix pm =
        trisurf::assemble_period_matrix({}, 1e-8, 1);
    return {pm.max_residual < 1e-8,
            "worst of 80 entries vs transport = " + sci(pm.max_residual) +
                " (< 1e-8)"};
}

Verdict criterion_lattice_identities() {
    const trisurf::LatticeData data = trisurf::load_lattice_data();
    const trisurf::LatticeIdentitySet identities =
        trisurf::verify_all_lattice_identities(data);
    const trisurf::MutationSweepResult sweep = trisurf::mutation_sweep(data);
    const bool sweep_complete = sweep.detected == sweep.total;
    std::string detail =
        std::string("six identities ") +
        (identities.all() ? "exact" : "BROKEN") + "; mutations detected " +
        std::to_string(sweep.detected) + "/" + std::to_string(sweep.total);
    if (!sweep_complete) {
        detail += "\n      note: the " +
                  std::to_string(sweep.total - sweep.detected) +
                  " undetected entries (G_R_1 row 3; G_I_1 rows 5 and 8) "
                  "multiply identically-zero columns of Omega_R/Omega_I, so "
                  "no single-entry mutation there can move any identity; "
                  "verified exhaustively in exact arithmetic";
    }
    return {identities.all() && sweep_complete, detail};
}

Verdict criterion_associate_rank() {
    const int rank = trisurf::associate_rank_sweep(20);
    return {rank == 4, "min rank over reduced |m|,|n| <= 20 is " +
                           std::to_string(rank) + " (= 4)"};
}

Verdict criterion_homology() {
    trisurf::HomologyOptions options;
    const auto full = trisurf::verify_homological_triviality(options);
    options.excision_radius /= 2.0;
    const auto halved = trisurf::verify_homological_triviality(options);
    double worst_ratio = 0.0, worst_move = 0.0;
    bool bounded = true;
    for (int k = 0; k < 6; ++k) {
        worst_ratio = std::max(
            worst_ratio, std::abs(full[k].integral) / (1e-4 * full[k].scale));
        bounded = bounded &&
                  std::abs(full[k].integral) <= 1e-4 * full[k].scale;
        worst_move = std::max(
            worst_move, std::abs(full[k].integral - halved[k].integral));
    }
    return {bounded && worst_move < 1e-6,
            "worst |integral| at " + sci(worst_ratio) +
                " of the 1e-4*scale bound; halving moved <= " +
                sci(worst_move) + " (< 1e-6)"};
}

Verdict criterion_symmetry() {
    const double worst = std::max(
        {trisurf::verify_pullback(trisurf::rotation_automorphism(),
                                  trisurf::rotation_pullback(), 100),
         trisurf::verify_pullback(trisurf::rotation_symmetry(),
                                  trisurf::rotation_symmetry_pullback(), 100),
         trisurf::verify_pullback(trisurf::inversion_symmetry(),
                                  trisurf::inversion_symmetry_pullback(),
                                  100)});

    const Matrix<QSqrt3> b1 = trisurf::rotation_symmetry_pullback().block();
    const Matrix<QSqrt3> b2 = trisurf::inversion_symmetry_pullback().block();
    const trisurf::GeneratedGroup group = trisurf::generated_group({b1, b2});

    Matrix<QSqrt3> power = identity4();
    bool order_twelve = true;
    for (int k = 1; k <= 12; ++k) {
        power = power.multiply(b1);
        if (k < 12 && power == identity4()) order_twelve = false;
    }
    const bool dihedral = order_twelve && power == identity4() &&
                          b2.multiply(b2) == identity4() &&
                          b2.multiply(b1).multiply(b2) == b1.transpose();
    bool split = true;
    for (const Matrix<QSqrt3>& element : group.elements)
        split = split && trisurf::preserves_plane_splitting(element);

    return {worst < 1e-12 && group.order == 24 && dihedral && split,
            "worst pullback residual " + sci(worst) + " (< 1e-12); order " +
                std::to_string(group.order) +
                " (= 24), dihedral relations exact, splitting preserved"};
}

Verdict criterion_conformality() {
    const bool identity = trisurf::conformal_identity_exact();
    const bool zeros = trisurf::check_no_common_zeros();
    return {identity && zeros,
            std::string("sum of squared numerators ") +
                (identity ? "vanishes exactly" : "DOES NOT vanish") +
                "; common zeros " + (zeros ? "excluded" : "FOUND")};
}

Verdict criterion_obstruction() {
    int mismatches = 0;
    for (int g = 0; g <= 301; ++g) {
        const trisurf::Obstruction verdict = trisurf::trigonal_obstruction(g);
        const bool expected = g >= 4 && g % 3 == 1;
        if (verdict.admissible != expected) ++mismatches;
        if (verdict.admissible && verdict.r != (g - 1) / 3) ++mismatches;
        if (!verdict.admissible && verdict.reason.empty()) ++mismatches;
    }
    return {mismatches == 0, "all g <= 301 agree with g = 3r+1, r >= 1 (" +
                                 std::to_string(mismatches) + " mismatches)"};
}

Verdict criterion_mesh() {
    const trisurf::ImmersedMesh mesh = trisurf::build_mesh(1.2, 0, 0.0);
    const trisurf::PathIndependenceReport paths =
        trisurf::verify_path_independence(mesh, 50);
    const trisurf::ConformalityReport conformality =
        trisurf::verify_conformality(mesh);
    const bool pass = paths.checked == 50 && paths.all_consistent() &&
                      conformality.pass_fraction() >= 0.95;
    char buffer[160];
    std::snprintf(buffer, sizeof buffer,
                  "%zu/%zu dual routes consistent (worst lattice residual "
                  "%.2e); conformality on %.1f%% of %zu triangles (>= 95%%)",
                  paths.direct_matches + paths.lattice_matches, paths.checked,
                  paths.worst_residual, 100.0 * conformality.pass_fraction(),
                  conformality.sampled);
    return {pass, buffer};
}

}  // namespace

int main() {
    int line = 0, criterion_failures = 0, contract_failures = 0;
    const auto timed = [&](const char* name, double budget,
                           Verdict (*run)()) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict verdict;
        try {
            verdict = run();
        } catch (const std::exception& e) {
            verdict = {false, std::string("aborted: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        if (budget > 0 && seconds >= budget) {
            verdict.pass = false;
            verdict.detail += " [over budget]";
        }
        ++line;
        if (!verdict.pass) ++criterion_failures;
        std::printf("%s %2d. %-22s %s", verdict.pass ? "PASS" : "FAIL", line,
                    name, verdict.detail.c_str());
        if (budget > 0)
            std::printf(" [%.2fs, budget %.0fs]", seconds, budget);
        std::printf("\n");
    };

    timed("beta-gamma relation", 1.0, criterion_beta_gamma);
    timed("base period columns", 10.0, criterion_base_periods);
    timed("period transport", 60.0, criterion_transport);
    timed("lattice identities", 0.0, criterion_lattice_identities);
    timed("associate rank", 5.0, criterion_associate_rank);
    timed("homological triviality", 120.0, criterion_homology);
    timed("symmetry group", 0.0, criterion_symmetry);
    timed("conformality", 0.0, criterion_conformality);
    timed("obstruction table", 0.0, criterion_obstruction);
    timed("mesh sanity", 0.0, criterion_mesh);

    // Report contract: the full ladder must expose at least 18 items.
    try {
        const trisurf::VerificationReport ladder = trisurf::run_all();
        const bool ok = ladder.items.size() >= 18 && ladder.all_pass();
        std::printf("%s     verification ladder: %zu items, %zu passed "
                    "(contract: >= 18 items)\n",
                    ok ? "PASS" : "FAIL", ladder.items.size(),
                    ladder.passed());
        if (!ok) ++contract_failures;
    } catch (const std::exception& e) {
        std::printf("FAIL     verification ladder aborted: %s\n", e.what());
        ++contract_failures;
    }

    std::printf("%d of %d criteria pass\n", line - criterion_failures, line);
    return criterion_failures + contract_failures == 0 ? 0 : 1;
}
