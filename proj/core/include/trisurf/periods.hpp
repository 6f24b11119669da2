#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "trisurf/constants.hpp"
#include "trisurf/cycles.hpp"
#include "trisurf/exact.hpp"
#include "trisurf/matrix.hpp"
#include "trisurf/quadrature.hpp"

namespace trisurf {

/*
 * Periods of the four differentials over the 20 cycles, by two independent
 * routes:
 *
 *  numeric   — adaptive quadrature of Ψ along each arc, with the branch-
 *              point endpoints handled by the singular-endpoint machinery
 *              and the sheet evaluated in the arcs' stable closed form;
 *  symbolic  — the closed forms: the two base columns are c₁v₁ and c₂v₁
 *              with c₁ = 1 + e^{iπ/3}, c₂ = i√3,
 *              v₁ = (α, −α, √3iγ, −iγ), and every further column is the
 *              exact pullback transport of the previous pair,
 *                  col(φC) = e^{2πi/3} · diag(R(π/2), R(−π/3)) · col(C).
 *
 * Agreement of the two routes at 80 entries is the core consistency
 * certificate of the toolkit.
 */

// Exact scalars c₁ = 1 + e^{iπ/3} and c₂ = e^{2πi/3} + e^{iπ/3} = i√3.
GaussSqrt3 scalar_c1();
GaussSqrt3 scalar_c2();

// The closed-form period columns of the two base cycles.
std::array<SymbolicScalar, 4> a1_period_symbolic();
std::array<SymbolicScalar, 4> a2_period_symbolic();

// One application of the pullback transport to a period column.
std::array<SymbolicScalar, 4> transport_column(
    const std::array<SymbolicScalar, 4>& col);

// The full 4×20 symbolic period matrix in cycle column order
// (A₁, A₂, B₁, B₂, A₃, A₄, …).
Matrix<SymbolicScalar> period_matrix_symbolic();

// Quadrature of component (0..3) of Ψ over the cycle; the result carries
// the accumulated error estimate of the underlying integrals.
struct PeriodValue {
    std::complex<double> value;
    double error = 0.0;
};
PeriodValue period_numeric(const CyclePath& c, int component,
                           const QuadratureSpec& spec = {});

std::array<PeriodValue, 4> period_vector_numeric(const CyclePath& c,
                                                 const QuadratureSpec& spec = {});

struct PeriodMatrix {
    Matrix<std::complex<double>> numeric;  // 4×20 quadrature values
    Matrix<SymbolicScalar> symbolic;       // 4×20 closed forms
    std::vector<std::string> labels;       // column cycle labels
    double max_residual = 0.0;             // worst |numeric − symbolic|
    double max_quad_error = 0.0;           // worst quadrature error estimate
};

// Computes both routes over all 20 cycles and cross-checks them entrywise;
// throws MismatchError if any entry differs by more than tol. jobs > 1
// distributes columns across threads (identical results in any mode).
PeriodMatrix assemble_period_matrix(const QuadratureSpec& spec = {},
                                    double tol = 1e-8, int jobs = 1);

/*
 * The relation β = √3γ, certified three ways: directly on the numeric
 * constants, and by evaluating the third period component over the cycle
 * φ⁵(A₁) — whose closed form can be written either through β alone or
 * through the mixed combination (β + √3γ)/2 — against quadrature.
 */
struct BetaGammaCertificate {
    double relation_residual;    // |β − √3γ| / β
    double via_beta_residual;    // |∫ − √3·β|
    double via_mixed_residual;   // |∫ − √3·(β + √3γ)/2|
    std::complex<double> integral;  // the quadrature value itself
};

BetaGammaCertificate verify_beta_gamma_relation(const QuadratureSpec& spec = {});

}  // namespace trisurf
