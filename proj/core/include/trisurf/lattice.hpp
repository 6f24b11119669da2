#pragma once

#include <string>
#include <vector>

#include "trisurf/exact.hpp"
#include "trisurf/matrix.hpp"

namespace trisurf {

/*
 * Exact linear algebra for the lattice side of the construction.
 *
 * The six reduction identities tie together three matrix pairs:
 *
 *     Ω · G^Ω₁ = (Ω₈ | Ω₉)          (Ω₈ | Ω₉) · G^Ω₂ = Ω
 *     Ω_R · G^R₁ = Λ                Λ · G^R₂ = Ω_R
 *     Ω_I · G^I₁ = Λ_{π/2}          Λ_{π/2} · G^I₂ = Ω_I
 *
 * where Ω is the symbolic 4×20 period matrix, (Ω₈ | Ω₉) its reduced 4×8
 * spanning set, Ω_R / Ω_I the real and imaginary parts of that set, and
 * Λ / Λ_{π/2} the upper-triangular lattice bases of the immersion and its
 * conjugate.  A spanning set lies in a lattice iff both directions of its
 * reduction hold over the integers — that two-sided certificate is what
 * these identities encode, and every check here runs in exact arithmetic
 * over rational combinations of {α, √3α, γ, √3γ} with Gaussian-√3
 * coefficients.
 */

// The six integer transformation matrices, loaded from the versioned
// plain-text data file so the transcription stays auditable.
struct LatticeData {
    Matrix<long long> g_omega_1;  // 20×8
    Matrix<long long> g_omega_2;  // 8×20, acting orientation
    Matrix<long long> g_r_1;      // 8×4
    Matrix<long long> g_r_2;      // 4×8
    Matrix<long long> g_i_1;      // 8×4
    Matrix<long long> g_i_2;      // 4×8
};

// The build-tree copy of the data file if it exists, else the installed
// copy.  Throws IOError if neither is present.
std::string default_lattice_data_path();

// Parses the data file ("format 1", sections of "matrix NAME ROWS COLS"
// followed by row-major integers, '#' comments).  Shapes are normalized —
// a matrix stored transposed is flipped into acting orientation — and the
// Ω-reduction identity is evaluated once to lock the orientation of the
// wide pair; a file that satisfies it in neither orientation is rejected.
// Throws IOError on syntax, shape, or orientation failures.
LatticeData load_lattice_data(const std::string& path);
LatticeData load_lattice_data();

// Closed-form symbolic tables.
Matrix<SymbolicScalar> omega_8();                 // 4×4
Matrix<SymbolicScalar> omega_9();                 // 4×4
Matrix<SymbolicScalar> omega_reduced();           // (Ω₈ | Ω₉), 4×8
Matrix<SymbolicScalar> omega_real_table();        // Ω_R, 4×8, real entries
Matrix<SymbolicScalar> omega_imag_table();        // Ω_I, 4×8, real entries
Matrix<SymbolicScalar> lattice_basis();           // Λ, 4×4 upper triangular
Matrix<SymbolicScalar> conjugate_lattice_basis(); // Λ_{π/2}, 4×4

// Two-sided reduction certificate: U·G1 == V and V·G2 == U, both exact.
// Throws DimensionMismatch if the shapes do not conform.
bool verify_two_sided_reduction(const Matrix<SymbolicScalar>& U,
                                const Matrix<SymbolicScalar>& V,
                                const Matrix<long long>& G1,
                                const Matrix<long long>& G2);

// The Ω-reduction pair plus the real/imaginary split: Ω·G^Ω₁ = (Ω₈|Ω₉),
// (Ω₈|Ω₉)·G^Ω₂ = Ω, and Re/Im of (Ω₈|Ω₉) reproduce Ω_R and Ω_I entrywise.
bool verify_omega_reduction(const LatticeData& data);

// The imaginary pair Ω_I·G^I₁ = Λ_{π/2}, Λ_{π/2}·G^I₂ = Ω_I, plus exact
// nondegeneracy of Λ_{π/2} (upper triangular with nonzero diagonal).
bool conjugate_lattice_check(const LatticeData& data);

// Numeric determinant of Λ_{π/2} (cofactor expansion of the embedded
// matrix); nonzero iff the conjugate lattice has full rank.
double conjugate_lattice_determinant();

// All six identities plus the split, individually reported.
struct LatticeIdentitySet {
    bool omega_forward = false;     // Ω·G^Ω₁ = (Ω₈|Ω₉)
    bool omega_backward = false;    // (Ω₈|Ω₉)·G^Ω₂ = Ω
    bool split_real = false;        // Re(Ω₈|Ω₉) = Ω_R
    bool split_imag = false;        // Im(Ω₈|Ω₉) = Ω_I
    bool real_forward = false;      // Ω_R·G^R₁ = Λ
    bool real_backward = false;     // Λ·G^R₂ = Ω_R
    bool imag_forward = false;      // Ω_I·G^I₁ = Λ_{π/2}
    bool imag_backward = false;     // Λ_{π/2}·G^I₂ = Ω_I
    bool all() const {
        return omega_forward && omega_backward && split_real && split_imag &&
               real_forward && real_backward && imag_forward && imag_backward;
    }
};
LatticeIdentitySet verify_all_lattice_identities(const LatticeData& data);

/*
 * Mutation sweep: perturb every entry of every integer matrix by ±1 and
 * check whether the identity that matrix participates in still holds.
 * An entry is "detected" when both perturbations break its identity.
 * Twelve entries are structurally undetectable — G^R₁ row 3 and G^I₁
 * rows 5 and 8 multiply zero columns of Ω_R and Ω_I, so no perturbation
 * there can move the products.
 */
struct MutationSweepResult {
    int total = 0;
    int detected = 0;
    std::vector<std::string> undetected;  // "NAME(row,col)", 1-based
};
MutationSweepResult mutation_sweep(const LatticeData& data);

/*
 * Associate-family rank.  With √3·tan θ = m/n the scaled real part
 * (Ω₁₀ | Ω₁₁)/cos θ = Ω_R − tan θ · Ω_I has rows that are rational
 * multiples of α, α, γ, √3γ; extracting the rational coefficients gives a
 * 4×8 matrix over Q whose rank is computed by fraction-free (Bareiss)
 * elimination.  Rank 4 certifies the associate surface's lattice spans R⁴.
 * Throws DegenerateAngle when n = 0.
 */
int associate_rank(long long m, long long n);

// Minimum of associate_rank over all gcd-reduced pairs with |m| ≤ bound,
// 1 ≤ |n| ≤ bound (expected: 4).
int associate_rank_sweep(long long bound);

// Exact fraction-free (Bareiss) rank of a rational matrix.
int rational_matrix_rank(Matrix<Rational> m);

}  // namespace trisurf
