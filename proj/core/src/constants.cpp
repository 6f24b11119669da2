#include "trisurf/constants.hpp"

#include <cmath>

#include "trisurf/errors.hpp"

namespace trisurf {

double beta_function(double a, double b) {
    if (!(a > 0) || !(b > 0))
        throw DomainError("beta_function: arguments must be positive");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double beta_function_quadrature(double a, double b,
                                const QuadratureSpec& spec) {
    if (!(a > 0) || !(b > 0))
        throw DomainError("beta_function_quadrature: arguments must be positive");
    // The singular factors are formed from the endpoint distance d, which
    // stays exact where 1 − t would round away.
    auto f = [a, b](double t, double d) {
        const double from0 = (t < 0.5) ? d : t;
        const double from1 = (t < 0.5) ? 1.0 - t : d;
        return std::pow(from0, a - 1.0) * std::pow(from1, b - 1.0);
    };
    Endpoint left = a < 1 ? Endpoint::algebraic(a - 1.0) : Endpoint::regular();
    Endpoint right = b < 1 ? Endpoint::algebraic(b - 1.0) : Endpoint::regular();
    return integrate_real(RealIntegrandNear(f), 0.0, 1.0, spec, left, right)
        .value;
}

double gamma_constant_quadrature(const QuadratureSpec& spec) {
    // Integrand ∛(4(1−t²)(4t²−1)²)^{−1}: exponent −2/3 at t = 1/2 from the
    // (4t²−1)² factor, −1/3 at t = 1 from (1−t²). The vanishing factors
    // 2t−1 = 2d and 1−t = d are taken from the endpoint distance on their
    // singular side.
    auto f = [](double t, double d) {
        const double two_t_minus_1 = (t < 0.75) ? 2.0 * d : 2.0 * t - 1.0;
        const double one_minus_t = (t < 0.75) ? 1.0 - t : d;
        const double lin = two_t_minus_1 * (2.0 * t + 1.0);
        const double radicand = 4.0 * one_minus_t * (1.0 + t) * lin * lin;
        return 1.0 / std::cbrt(radicand);
    };
    return integrate_real(RealIntegrandNear(f), 0.5, 1.0, spec,
                          Endpoint::algebraic(-2.0 / 3.0),
                          Endpoint::algebraic(-1.0 / 3.0))
        .value;
}

LatticeConstants lattice_constants(const QuadratureSpec& spec) {
    LatticeConstants c{};
    c.alpha = beta_function(2.0 / 3.0, 1.0 / 6.0) / (6.0 * std::cbrt(2.0));
    c.beta = beta_function(1.0 / 3.0, 1.0 / 6.0) / (4.0 * std::sqrt(3.0));
    c.gamma = gamma_constant_quadrature(spec);
    return c;
}

}  // namespace trisurf
