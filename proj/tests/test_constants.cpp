#include "doctest.h"

#include <cmath>
#include <random>

#include "trisurf/constants.hpp"
#include "trisurf/errors.hpp"

using namespace trisurf;

// Frozen 20-digit oracle values computed independently at high precision.
namespace oracle {
constexpr double B_23_16 = 6.6774760471338323074;
constexpr double B_13_16 = 8.4130926319527255671;
constexpr double alpha = 0.88331937514272497866;
constexpr double beta = 1.2143253239437908059;
constexpr double gamma = 0.70109105266272713059;
}  // namespace oracle

TEST_CASE("beta_function basic identities") {
    CHECK(beta_function(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(beta_function(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(beta_function(1.0, -2.0), DomainError);

    // Symmetry and B(a,1) = 1/a at random arguments.
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(0.05, 8.0);
    for (int k = 0; k < 50; ++k) {
        double a = dist(rng), b = dist(rng);
        CHECK(beta_function(a, b) ==
              doctest::Approx(beta_function(b, a)).epsilon(1e-13));
        CHECK(beta_function(a, 1.0) ==
              doctest::Approx(1.0 / a).epsilon(1e-13));
    }
}

TEST_CASE("beta_function against frozen oracle values") {
    CHECK(beta_function(2.0 / 3.0, 1.0 / 6.0) ==
          doctest::Approx(oracle::B_23_16).epsilon(1e-13));
    CHECK(beta_function(1.0 / 3.0, 1.0 / 6.0) ==
          doctest::Approx(oracle::B_13_16).epsilon(1e-13));
}

TEST_CASE("quadrature route agrees with log-Gamma route") {
    const double pairs[][2] = {
        {2.0 / 3.0, 1.0 / 6.0}, {1.0 / 3.0, 1.0 / 6.0}, {0.5, 0.5}};
    for (auto& p : pairs) {
        double via_gamma = beta_function(p[0], p[1]);
        double via_quad = beta_function_quadrature(p[0], p[1]);
        CHECK(std::abs(via_quad - via_gamma) < 1e-11 * via_gamma);
    }
}

TEST_CASE("lattice constants and the beta = sqrt3 gamma identity") {
    LatticeConstants c = lattice_constants();
    CHECK(c.alpha > 0);
    CHECK(c.beta > 0);
    CHECK(c.gamma > 0);

    CHECK(c.alpha == doctest::Approx(oracle::alpha).epsilon(1e-13));
    CHECK(c.beta == doctest::Approx(oracle::beta).epsilon(1e-13));
    CHECK(c.gamma == doctest::Approx(oracle::gamma).epsilon(1e-11));

    // The exact relation tying the Beta route to the quadrature route.
    CHECK(std::abs(c.beta - std::sqrt(3.0) * c.gamma) <= 1e-10 * c.beta);

    // And its corollary β/γ = √3.
    CHECK(c.beta / c.gamma == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
}
