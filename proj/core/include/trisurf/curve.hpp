#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "trisurf/errors.hpp"
#include "trisurf/intpoly.hpp"

namespace trisurf {

using Complex = std::complex<double>;

/*
 * The trigonal curve w³ = z^{g+2} − 1 and its Weierstrass data
 *
 *   Ψ = ( (1−z⁶)/w², i(1+z⁶)/w², (z⁵+z)/w², i(z⁵−z)/w² ) dz      (g = 10)
 *
 * The curve is a 3-sheeted cover of the z-plane, totally ramified over the
 * twelve roots of z¹² = 1. Away from those branch points the three sheet
 * values are the distinct cube roots of z¹² − 1; continuation along paths
 * picks the branch that varies continuously.
 */

// Parameters of the family member: genus g = 3r+1 and the exponent of z in
// the defining equation. Only g = 10 carries cycles and period targets; the
// general constructor exists for the obstruction sweep and dimension checks.
struct CurveParams {
    int genus = 10;
    int branch_degree = 12;  // exponent of z; always genus + 2

    static CurveParams standard() { return {}; }

    // Enforces membership in the admissible family g = 3r+1, r ≥ 1.
    void validate() const {
        if (genus < 4 || genus % 3 != 1)
            throw DomainError("CurveParams: genus must be 3r+1 with r >= 1");
        if (branch_degree != genus + 2)
            throw DomainError("CurveParams: branch degree must equal genus + 2");
    }
};

// A point (z, w) on the curve; w is the sheet value over z.
struct SurfacePoint {
    Complex z;
    Complex w;
};

// Whether |w³ − (z¹²−1)| ≤ tol·max(1, |z|¹²).
bool on_curve(const SurfacePoint& p, double tol = 1e-12);

// The three sheet values over z — the cube roots of z¹² − 1 — sorted by
// ascending principal argument in (−π, π]. At a branch point all three
// coincide at 0. E.g. z = 0 yields {e^{−iπ/3}, e^{iπ/3}, −1}.
std::array<Complex, 3> sheet_values(Complex z);

// Value of the four-component integrand Ψ at a point.
struct PsiValue {
    std::array<Complex, 4> components;

    // Conformality defect Σₖ componentsₖ² (identically 0 on the curve).
    Complex square_sum() const {
        Complex s = 0.0;
        for (const auto& c : components) s += c * c;
        return s;
    }
};

// Evaluates Ψ at p. Throws BranchPointSingularity when w = 0, where the
// 1/w² factor has a pole.
PsiValue psi(const SurfacePoint& p);

/*
 * ContinuedSheet — a continuous branch of w along a parametrized path
 * z(t), t ∈ [t0, t1], pinned down by a seed value at t0. Construction walks
 * the path once with adaptive steps (initial step = |t1−t0|/64, halved
 * whenever the nearest cube root is further than half the previous sheet
 * magnitude) and records checkpoints; evaluation resumes from the nearest
 * checkpoint. The path must not pass through a branch point except at its
 * endpoints, and evaluation is meaningful only away from those endpoints.
 */
class ContinuedSheet {
public:
    ContinuedSheet(std::function<Complex(double)> z_path, double t0, double t1,
                   Complex w_seed);

    double t0() const { return t0_; }
    double t1() const { return t1_; }
    Complex z(double t) const { return path_(t); }

    // Continued sheet value at t ∈ [t0, t1].
    Complex operator()(double t) const;

private:
    Complex walk(double t_from, Complex w_from, double t_to) const;

    std::function<Complex(double)> path_;
    double t0_ = 0.0;
    double t1_ = 1.0;
    double initial_step_ = 0.0;
    std::vector<std::pair<double, Complex>> checkpoints_;
};

// Continues the sheet with value w_seed at t0 along z_path to all of
// [t0, t1]. Throws SeedOffCurve if the seed violates the curve equation and
// AmbiguousContinuation if step refinement bottoms out without resolving
// the nearest-root choice (e.g. on a path through a branch point).
ContinuedSheet continue_sheet(std::function<Complex(double)> z_path, double t0,
                              double t1, Complex w_seed);

// The four numerator polynomials of Ψ over the Gaussian integers:
// 1−z⁶, i(1+z⁶), z⁵+z, i(z⁵−z).
std::array<GaussIntPoly, 4> psi_numerators();

// Exact polynomial identity Σₖ (numeratorₖ)² = 0, the conformality
// condition cleared of the common 1/w² factor.
bool conformal_identity_exact();

// True iff the given numerator polynomials (unit factors dropped, zero
// polynomials skipped) have no common root, by exact integer-polynomial gcd.
// An all-zero family has every point as a common zero and yields false.
bool check_no_common_zeros(const std::vector<IntPoly>& numerators);

// The built-in check for Ψ itself: integer gcd of the four numerators plus
// nonvanishing of the numerator family at the twelve branch points (where
// 1/w² has a pole of fractional order and a simultaneous numerator zero
// would be needed to kill all four differentials).
bool check_no_common_zeros();

// Existence verdict for a complete trigonal minimal immersion of genus g
// into a flat 4-torus by this family.
struct Obstruction {
    bool admissible = false;
    int r = 0;           // the family index when admissible (g = 3r+1)
    std::string reason;  // set when obstructed
};

// Admissible(r) iff g = 3r+1 with r ≥ 1; otherwise obstructed with reason
// "not trigonal" (g ≤ 3) or "genus ≡ 0 or 2 mod 3".
Obstruction trigonal_obstruction(int g);

}  // namespace trisurf
