#pragma once

#include <cstddef>
#include <vector>

#include "trisurf/curve.hpp"
#include "trisurf/cycles.hpp"
#include "trisurf/exact.hpp"
#include "trisurf/matrix.hpp"

namespace trisurf {

/*
 * Symmetries of the immersed surface.
 *
 * A holomorphic automorphism a of the curve acts on the Weierstrass data by
 * pullback: a*Ψ = scalar · block · Ψ, where the scalar is a complex unit
 * and the block is a real orthogonal 4×4 matrix with entries in Q(√3).
 * This module carries the relevant automorphisms, their expected pullback
 * actions, a numeric sampler that verifies the pullback identity pointwise,
 * and an exact-arithmetic closure of the matrix group the blocks generate.
 */

// The symmetries below reuse the curve Automorphism type: an action on
// surface points together with the z-derivative of the base-coordinate map
// (needed to pull back the dz factor).

// Deck transformation of the 3-sheeted covering: (z, w) ↦ (z, e^{2πi/3}·w).
// Fixes the base coordinate, so the quotient map to the z-sphere is
// invariant under it.
Automorphism deck_transformation();

// Pure rotation of the base coordinate: (z, w) ↦ (e^{iπ/6}·z, w). Its
// pullback carries the unit scalar e^{2πi/3}.
Automorphism rotation_automorphism();

// Rotation composed with the squared deck transformation:
// (z, w) ↦ (e^{iπ/6}·z, e^{4πi/3}·w). The deck factor cancels the rotation
// pullback's scalar, leaving a purely real (isometric) action on the
// immersion.
Automorphism rotation_symmetry();

// Involution over z ↦ 1/z: (z, w) ↦ (1/z, −w/z⁴). The cube-root lift of
// the w-action is chosen so the pullback is scalar-free. Singular at z = 0.
Automorphism inversion_symmetry();

// Expected pullback action a*Ψ = scalar·block·Ψ. Both factors are exact:
// the scalar a complex unit over Q(√3), the block a real orthogonal 4×4
// matrix over Q(√3).
class PullbackMatrix {
public:
    // Validates exactly: scalar·conj(scalar) = 1 and blockᵀ·block = I.
    // Throws DomainError if either fails or the block is not 4×4.
    PullbackMatrix(GaussSqrt3 scalar, Matrix<QSqrt3> block);

    const GaussSqrt3& scalar() const { return scalar_; }
    const Matrix<QSqrt3>& block() const { return block_; }

private:
    GaussSqrt3 scalar_;
    Matrix<QSqrt3> block_;
};

// Pullback of rotation_automorphism: scalar e^{2πi/3}, block
// diag(R(π/2), R(−π/3)) where R(t) is the 2×2 rotation by t.
PullbackMatrix rotation_pullback();

// Pullback of rotation_symmetry: scalar 1, block diag(R(π/2), R(−π/3)).
PullbackMatrix rotation_symmetry_pullback();

// Pullback of inversion_symmetry: scalar 1, block diag(1, −1, −1, 1).
PullbackMatrix inversion_symmetry_pullback();

// Residual of the pullback identity at one surface point:
//   ‖Ψ(a(p))·(d a_z/dz)(p) − scalar·block·Ψ(p)‖∞ / ‖scalar·block·Ψ(p)‖∞.
// Throws DomainError if p violates the curve equation and
// SampleOnSingularLocus if p lies on the branch locus or the automorphism
// is singular there (e.g. z = 0 under the inversion).
double pullback_residual_at(const Automorphism& a,
                            const PullbackMatrix& expected,
                            const SurfacePoint& p);

// Worst pullback residual over sample_count deterministic pseudo-random
// points, drawn away from the branch locus and from z = 0 and spread over
// all three sheets. Identical inputs give bitwise-identical results.
double verify_pullback(const Automorphism& a, const PullbackMatrix& expected,
                       std::size_t sample_count);

// True iff every entry outside the two diagonal 2×2 blocks (coordinates
// {1,2} and {3,4}) is exactly zero.
bool is_block_diagonal(const Matrix<QSqrt3>& m);

// True iff m maps the pair of coordinate 2-planes {1,2}, {3,4} to itself:
// block-diagonal (each plane fixed) or block-anti-diagonal (planes
// swapped). Either way the 4-dimensional action is reducible.
bool preserves_plane_splitting(const Matrix<QSqrt3>& m);

// Closure of the matrix group generated by exact orthogonal blocks.
struct GeneratedGroup {
    std::size_t order = 0;
    // All elements, including the identity, in a canonical deterministic
    // order (lexicographic on entries).
    std::vector<Matrix<QSqrt3>> elements;
    // For each generator, in input order: whether it preserves the
    // coordinate-plane splitting {1,2} ⊕ {3,4}.
    std::vector<bool> generator_preserves_splitting;
};

// Closes the group generated by the given blocks under exact Q(√3)
// multiplication. Every generator must be 4×4 (DimensionMismatch) and
// exactly orthogonal (DomainError). Throws NonClosure if the element count
// exceeds max_order, which signals an arithmetic error for the finite
// groups expected here.
GeneratedGroup generated_group(const std::vector<Matrix<QSqrt3>>& generators,
                               std::size_t max_order = 10000);

}  // namespace trisurf
