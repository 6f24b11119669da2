#include "doctest.h"

#include <cmath>
#include <complex>

#include "trisurf/periods.hpp"

using namespace trisurf;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::array<std::complex<double>, 4> base_column_reference(
    std::complex<double> c, double alpha, double gamma) {
    const std::complex<double> i(0.0, 1.0);
    const double r3 = std::sqrt(3.0);
    return {c * alpha, -c * alpha, c * i * r3 * gamma, -c * i * gamma};
}

}  // namespace

TEST_CASE("closed-form scalars have the expected numeric values") {
    const std::complex<double> c1 = scalar_c1().to_complex();
    const std::complex<double> c2 = scalar_c2().to_complex();
    const std::complex<double> e3 = std::polar(1.0, kPi / 3.0);
    CHECK(std::abs(c1 - (1.0 + e3)) < 1e-15);
    CHECK(std::abs(c2 - std::complex<double>(0.0, std::sqrt(3.0))) < 1e-15);
}

TEST_CASE("base period columns embed to the scaled column vector") {
    const LatticeConstants lc = lattice_constants();
    const auto a1 = a1_period_symbolic();
    const auto a2 = a2_period_symbolic();
    const auto ref1 =
        base_column_reference(scalar_c1().to_complex(), lc.alpha, lc.gamma);
    const auto ref2 =
        base_column_reference(scalar_c2().to_complex(), lc.alpha, lc.gamma);
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(a1[k].embed(lc.alpha, lc.gamma) - ref1[k]) < 1e-14);
        CHECK(std::abs(a2[k].embed(lc.alpha, lc.gamma) - ref2[k]) < 1e-14);
    }
}

TEST_CASE("transport applied twelve times is the identity") {
    const auto start = a1_period_symbolic();
    auto col = start;
    bool returned_early = false;
    for (int k = 0; k < 12; ++k) {
        col = transport_column(col);
        if (k < 11 && col == start) returned_early = true;
    }
    CHECK(col == start);
    CHECK_FALSE(returned_early);
}

TEST_CASE("transport matches its numeric embedding") {
    const LatticeConstants lc = lattice_constants();
    const std::complex<double> u = std::polar(1.0, 2.0 * kPi / 3.0);
    auto col = a2_period_symbolic();
    std::array<std::complex<double>, 4> num;
    for (int k = 0; k < 4; ++k) num[k] = col[k].embed(lc.alpha, lc.gamma);
    for (int step = 0; step < 5; ++step) {
        col = transport_column(col);
        const std::array<std::complex<double>, 4> next = {
            u * (-num[1]), u * num[0],
            u * (0.5 * num[2] + 0.5 * std::sqrt(3.0) * num[3]),
            u * (-0.5 * std::sqrt(3.0) * num[2] + 0.5 * num[3])};
        for (int k = 0; k < 4; ++k) {
            CHECK(std::abs(col[k].embed(lc.alpha, lc.gamma) - next[k]) < 1e-13);
        }
        num = next;
    }
}

TEST_CASE("symbolic period matrix layout and distinguished entries") {
    const auto omega = period_matrix_symbolic();
    REQUIRE(omega.rows() == 4);
    REQUIRE(omega.cols() == 20);
    const auto a1 = a1_period_symbolic();
    const auto a2 = a2_period_symbolic();
    for (int i = 0; i < 4; ++i) {
        CHECK(omega(i, 0) == a1[i]);
        CHECK(omega(i, 1) == a2[i]);
    }
    // Column 10 is the fifth rotation of the A1 column; its third component
    // collapses to the real value 3γ — the symbolic heart of the β = √3γ
    // certificate.
    CHECK(omega(2, 10) == SymbolicScalar::gamma(GaussSqrt3(3)));
    // Its fourth component is the real value √3·γ.
    CHECK(omega(3, 10) == SymbolicScalar::gamma(GaussSqrt3(QSqrt3::sqrt3())));
}

TEST_CASE("quadrature reproduces the two base closed-form columns") {
    const LatticeConstants lc = lattice_constants();
    const auto a1 = a1_period_symbolic();
    const auto a2 = a2_period_symbolic();
    const CyclePath c1 = cycle_A1();
    const CyclePath c2 = cycle_A2();
    for (int k = 0; k < 4; ++k) {
        const auto p1 = period_numeric(c1, k);
        const auto p2 = period_numeric(c2, k);
        CHECK(std::abs(p1.value - a1[k].embed(lc.alpha, lc.gamma)) < 1e-8);
        CHECK(std::abs(p2.value - a2[k].embed(lc.alpha, lc.gamma)) < 1e-8);
        CHECK(p1.error < 1e-9);
        CHECK(p2.error < 1e-9);
    }
}

TEST_CASE("period_numeric validates the component index") {
    CHECK_THROWS_AS(period_numeric(cycle_A1(), 4), DomainError);
    CHECK_THROWS_AS(period_numeric(cycle_A1(), -1), DomainError);
}

TEST_CASE("full period matrix assembly cross-checks 80 entries") {
    const PeriodMatrix pm = assemble_period_matrix();
    CHECK(pm.max_residual <= 1e-8);
    CHECK(pm.max_quad_error <= 1e-9);
    REQUIRE(pm.labels.size() == 20);
    CHECK(pm.labels[0] == "A1");
    CHECK(pm.labels[1] == "A2");
    CHECK(pm.labels[2] == "B1");
    CHECK(pm.labels[10] == "B5");
    CHECK(pm.labels[19] == "B10");

    // Spot values of the first column against the closed form.
    const LatticeConstants lc = lattice_constants();
    const std::complex<double> c1 = scalar_c1().to_complex();
    CHECK(std::abs(pm.numeric(0, 0) - c1 * lc.alpha) < 1e-8);
    CHECK(std::abs(pm.numeric(1, 0) + c1 * lc.alpha) < 1e-8);
}

TEST_CASE("parallel assembly is bitwise identical to serial") {
    const PeriodMatrix serial = assemble_period_matrix({}, 1e-8, 1);
    const PeriodMatrix parallel = assemble_period_matrix({}, 1e-8, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 20; ++j) {
            CHECK(serial.numeric(i, j).real() == parallel.numeric(i, j).real());
            CHECK(serial.numeric(i, j).imag() == parallel.numeric(i, j).imag());
        }
}

TEST_CASE("assembly rejects an unattainable cross-check tolerance") {
    CHECK_THROWS_AS(assemble_period_matrix({}, 1e-18), MismatchError);
}

TEST_CASE("beta-gamma relation certified numerically and by quadrature") {
    const auto cert = verify_beta_gamma_relation();
    CHECK(cert.relation_residual < 1e-10);
    CHECK(cert.via_beta_residual < 1e-8);
    CHECK(cert.via_mixed_residual < 1e-8);
    // The integral itself is real and positive (≈ 3γ ≈ 2.103).
    CHECK(std::abs(cert.integral.imag()) < 1e-8);
    CHECK(cert.integral.real() == doctest::Approx(2.1032731580).epsilon(1e-6));
}
