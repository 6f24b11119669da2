#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "trisurf/errors.hpp"

namespace trisurf {

/*
 * Numerical integration engine. One-dimensional integrals use an adaptive
 * Gauss(7)/Kronrod(15) pair on integrands that have first been regularized
 * at flagged singular endpoints: an endpoint where the integrand blows up
 * like (distance)^e with e > −1 is removed exactly by the substitution
 * s = u^m, where m is the smallest positive integer making m·(1+e) a
 * positive integer (m = 3 for the ubiquitous e = −2/3, the cube
 * substitution; m = 6 for e = −5/6). Two-dimensional plane integrals fold
 * the outer region onto the inner disk through r → r_split²/r, so analytic
 * inner/outer cancellations happen pointwise inside one quadrature.
 */
struct QuadratureSpec {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_depth = 30;
    // Default growth class of flagged endpoints; per-endpoint overrides are
    // given in Endpoint::exponent.
    double singular_exponent = -2.0 / 3.0;

    void validate() const {
        if (!(abs_tol > 0 && abs_tol < 1) || !(rel_tol > 0 && rel_tol < 1))
            throw DomainError("QuadratureSpec: tolerances must lie in (0,1)");
        if (max_depth < 10)
            throw DomainError("QuadratureSpec: max_depth must be >= 10");
    }
};

// Description of one endpoint of an integration interval.
struct Endpoint {
    bool singular = false;
    // Growth exponent e in |f| ~ (distance)^e; NaN defers to
    // QuadratureSpec::singular_exponent. Only meaningful when singular is
    // true.
    double exponent = std::numeric_limits<double>::quiet_NaN();

    static Endpoint regular() { return {}; }
    static Endpoint algebraic(double e) { return {true, e}; }
    static Endpoint branch() { return {true, -2.0 / 3.0}; }
};

template <typename V>
struct QuadResult {
    V value{};
    double error = 0.0;
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;
using RealIntegrand = std::function<double(double)>;

/*
 * Distance-aware integrand form. The second argument is the distance from
 * t to the nearest endpoint of the integration interval; inside a
 * regularized singular panel it is computed directly from the substitution
 * variable, so it stays exact even when t itself rounds onto the endpoint
 * (which happens once the true offset drops under one ulp of the
 * endpoint). Integrands singular at a nonzero endpoint must evaluate the
 * singular factor from this distance — pow(d, e) — never from t - a or
 * b - t, or the factor degenerates to 1/0 at depth.
 */
using ComplexIntegrandNear =
    std::function<std::complex<double>(double, double)>;
using RealIntegrandNear = std::function<double(double, double)>;

// ∫ₐᵇ f(t) dt with optional singular-endpoint regularization. Throws
// ToleranceNotMet if the error estimate cannot be brought under
// max(abs_tol, rel_tol·|value|) within max_depth bisections, and
// NonIntegrableSingularity if sampled growth at a flagged endpoint is more
// than 0.1 beyond its declared exponent.
QuadResult<std::complex<double>> integrate_path(const ComplexIntegrand& f,
                                                double a, double b,
                                                const QuadratureSpec& spec,
                                                Endpoint left = {},
                                                Endpoint right = {});

QuadResult<double> integrate_real(const RealIntegrand& f, double a, double b,
                                  const QuadratureSpec& spec,
                                  Endpoint left = {}, Endpoint right = {});

// Distance-aware overloads; identical semantics, but the integrand also
// receives the distance to the nearest interval endpoint (see above).
QuadResult<std::complex<double>> integrate_path(const ComplexIntegrandNear& f,
                                                double a, double b,
                                                const QuadratureSpec& spec,
                                                Endpoint left = {},
                                                Endpoint right = {});

QuadResult<double> integrate_real(const RealIntegrandNear& f, double a,
                                  double b, const QuadratureSpec& spec,
                                  Endpoint left = {}, Endpoint right = {});

/*
 * Plane integral in polar form. The integrand f(r, θ) must already contain
 * the polar Jacobian r (so f = e^{−r²}·r integrates to π over the plane).
 * The radial line is split at r_split; the outer region is folded back by
 * r → r_split²/r and added pointwise, making ∫₀^∞ = ∫₀^{r_split} of
 * f(r,θ) + f(r_split²/r, θ)·r_split²/r².
 *
 * Optional hooks let callers align panels with known non-smooth loci:
 * radial_breakpoints(θ) returns sorted radii in (0, r_split) where the
 * integrand has kinks for that θ; theta_breakpoints lists angles in
 * [0, 2π] where the radial profile changes character.
 */
struct PlaneIntegralOptions {
    std::function<std::vector<double>(double)> radial_breakpoints;
    std::vector<double> theta_breakpoints;
};

QuadResult<double> integrate_plane(
    const std::function<double(double, double)>& f, const QuadratureSpec& spec,
    double r_split = 1.0, const PlaneIntegralOptions& options = {});

}  // namespace trisurf
