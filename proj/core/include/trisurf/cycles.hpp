#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trisurf/curve.hpp"

namespace trisurf {

/*
 * Homology cycles. Every cycle used by the toolkit is a union of unit-circle
 * arcs z(t) = e^{i(dir·t + offset)} whose endpoints are branch points, each
 * arc carrying a seed value that pins the sheet. Along such an arc the curve
 * right-hand side has the exact polar form
 *
 *     z¹² − 1 = 2i·sin X · e^{iX},   X = 6(dir·t + offset),
 *
 * so the continued sheet is w(t) = (2|sin X|)^{1/3} · e^{i(X + σπ/2 + 2πm)/3}
 * with σ = sign(sin X) on the arc interior and m ∈ {0,1,2} fixed by the seed.
 * Near a branch endpoint the vanishing factor is evaluated from the distance
 * to the endpoint, |sin X| = sin(6d), which stays exact long after t itself
 * has rounded onto the endpoint; this is what lets period quadrature reach
 * 1e−10 accuracy against the ideal arc.
 */
class ArcSegment {
public:
    // Arc z(t) = e^{i(dir·t + offset)}, t ∈ [t_lo, t_hi], with sheet seed
    // w(t_seed) = w_seed. Throws SeedOffCurve when the seed violates the
    // curve equation and DomainError for a malformed parameter range.
    ArcSegment(double dir, double offset, double t_lo, double t_hi,
               double t_seed, Complex w_seed);

    double dir() const { return dir_; }
    double offset() const { return offset_; }
    double t_lo() const { return t_lo_; }
    double t_hi() const { return t_hi_; }
    double t_seed() const { return t_seed_; }
    Complex w_seed() const { return w_seed_; }

    Complex z_at(double t) const;
    // dz/dt = i·dir·z(t)
    Complex dz_at(double t) const;

    // Continued sheet value; d is the distance from t to the nearer
    // endpoint (pass the exact value when known, e.g. from quadrature).
    Complex w_at(double t, double d) const;
    Complex w_at(double t) const;

    // Whether the endpoint sits on the branch locus z¹² = 1.
    bool starts_at_branch() const { return lo_branch_; }
    bool ends_at_branch() const { return hi_branch_; }

    // Returns a copy rotated by the symmetry z → e^{iπ/6}z (sheet value
    // unchanged): the offset advances by π/6 and the seed is preserved.
    ArcSegment rotated() const;

private:
    double phase_x(double t) const { return 6.0 * (dir_ * t + offset_); }

    double dir_;
    double offset_;
    double t_lo_;
    double t_hi_;
    double t_seed_;
    Complex w_seed_;
    int sigma_ = 1;             // sign of sin X on the interior
    int m_ = 0;                 // cube-root branch index from the seed
    bool lo_branch_ = false;    // X(t_lo) ≈ kπ
    bool hi_branch_ = false;
    int parity_lo_ = 1;         // (−1)^k at the respective endpoint
    int parity_hi_ = 1;
};

// A closed loop on the surface made of arcs joined at branch points (where
// the totally ramified cover has a single point over z, so matching
// z-endpoints suffice) or at matching sheet values.
struct CyclePath {
    std::string label;  // "A1".."A10", "B1".."B10"
    std::vector<ArcSegment> segments;
};

// Largest junction mismatch around the loop: the z-gap between consecutive
// arc endpoints, plus the sheet-value gap when the junction is not a branch
// point (at a branch point both one-sided sheet limits are 0).
double closure_defect(const CyclePath& c);

// The two base cycles. A₁ runs along {e^{it}, t ∈ [0, π/6]} with seed
// w(π/12) = −∛2, then back along {e^{−it}, t ∈ [−π/6, 0]} with seed
// w(−π/12) = −∛2·e^{2πi/3}; A₂ is identical except that the second seed is
// −∛2·e^{4πi/3}. Both arcs are traversed in increasing t.
CyclePath cycle_A1();
CyclePath cycle_A2();

// Image of a cycle under the rotation z → e^{iπ/6}z, relabeled.
CyclePath apply_phi(const CyclePath& c, const std::string& new_label);

// All 20 cycles in period-matrix column order: consecutive pairs are
// (φᵏA₁, φᵏA₂) for k = 0..9, i.e. A₁, A₂, B₁, B₂, A₃, A₄, B₃, B₄, …
// following the recurrences A₂ₖ₊₁ = φ²(A₂ₖ₋₁), A₂ₖ₊₂ = φ²(A₂ₖ),
// B₂ₗ₋₁ = φ(A₂ₗ₋₁), B₂ₗ = φ(A₂ₗ). Verifies every closure invariant
// (NonClosure on failure, which would indicate a construction bug).
std::vector<CyclePath> generate_all_cycles();

/*
 * The curve automorphisms:
 *   phi        (z, w) → (e^{iπ/6}·z, w)
 *   phi_prime  (z, w) → (1/z, e^{iπ/3}·w/z⁴)
 *   j          (z, w) → (z, e^{2πi/3}·w)
 * Each carries the derivative of its z-component, needed to pull the
 * differentials back.
 */
struct Automorphism {
    std::string name;
    std::function<SurfacePoint(const SurfacePoint&)> action;
    std::function<Complex(const SurfacePoint&)> dz;  // d(z∘a)/dz at p
};

Automorphism automorphism_phi();
Automorphism automorphism_phi_prime();
Automorphism automorphism_j();

// Composition a∘b (apply b first), with the chain rule on the derivative.
Automorphism compose(const Automorphism& a, const Automorphism& b);

// Applies the automorphism and checks that the image satisfies the curve
// equation. Throws DomainError for phi_prime at z = 0.
SurfacePoint apply_automorphism(const Automorphism& a, const SurfacePoint& p);

}  // namespace trisurf
