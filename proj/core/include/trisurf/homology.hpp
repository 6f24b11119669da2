#pragma once

#include <array>
#include <complex>

#include "trisurf/quadrature.hpp"

namespace trisurf {

/*
 * The image surface is homologous to zero in the torus iff the six wedge
 * integrals ∫∫ dxⁱ∧dxʲ over the surface vanish.  Pulling each 2-form back
 * through the immersion and summing the three sheets reduces every
 * integrand to an explicit density against r dr dθ on the z-plane:
 *
 *     dx¹∧dx² ↦ −3(1−r¹²)/|w|⁴
 *     dx³∧dx⁴ ↦  3(r²−r¹⁰)/|w|⁴
 *     dx¹∧dx³ ↦ −3[ r sinθ(1+r¹⁰) + r⁵ sin5θ(1+r²) ]/|w|⁴
 *     dx¹∧dx⁴ ↦  3[ r cosθ(1+r¹⁰) − r⁵ cos5θ(1+r²) ]/|w|⁴
 *     dx²∧dx³ ↦  3[ r cosθ(1+r¹⁰) + r⁵ cos5θ(1+r²) ]/|w|⁴
 *     dx²∧dx⁴ ↦  3[ r sinθ(1+r¹⁰) − r⁵ sin5θ(1+r²) ]/|w|⁴
 *
 * with |w|⁴ = (r²⁴ − 2r¹²cos12θ + 1)^{2/3}.  The first two cancel
 * pointwise under the inversion r → 1/r that folds the outer plane onto
 * the unit disk; the mixed four cancel in the angular average.  The
 * quadrature below performs exactly those folds, so each integral is a
 * numerical zero certified against the absolute-value normalizer.
 */

// Density of dxⁱ∧dxʲ (1 ≤ i < j ≤ 4) against r dr dθ at z, all three
// sheets summed; finite everywhere off the branch locus.  Throws
// SingularPoint on the locus, DomainError for a bad index pair.
double wedge_density(int i, int j, std::complex<double> z);
double wedge_density_polar(int i, int j, double r, double theta);

struct HomologyOptions {
    // Radius of the excised disks around the twelve branch points (the
    // excision is inversion-symmetric, preserving both cancellations).
    double excision_radius = 1e-3;
    QuadratureSpec quad{1e-8, 1e-8, 30, -2.0 / 3.0};
};

struct PairingResult {
    int i = 0, j = 0;
    double integral = 0.0;    // ∫∫ density · r dr dθ, excised
    double scale = 0.0;       // ∫∫ |density| · r dr dθ, same excision
    double quad_error = 0.0;  // summed error estimates of both integrals
};

// One wedge pairing with branch disks excised; the plane integral folds
// the outer region in, so the r → 1/r cancellation happens pointwise.
PairingResult verify_pairing(int i, int j, const HomologyOptions& opts = {});

// All six pairings in lexicographic order (1,2), (1,3), (1,4), (2,3),
// (2,4), (3,4).
std::array<PairingResult, 6> verify_homological_triviality(
    const HomologyOptions& opts = {});

}  // namespace trisurf
