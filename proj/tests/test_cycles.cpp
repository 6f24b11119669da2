#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "doctest.h"
#include "trisurf/cycles.hpp"

using trisurf::ArcSegment;
using trisurf::Complex;
using trisurf::CyclePath;
using trisurf::SurfacePoint;

namespace {

constexpr double kPi = 3.14159265358979323846;

double dist(Complex a, Complex b) { return std::abs(a - b); }

SurfacePoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> rad(0.3, 1.8);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> sheet(0, 2);
    for (;;) {
        const Complex z = std::polar(rad(rng), ang(rng));
        const Complex w = trisurf::sheet_values(z)[sheet(rng)];
        if (std::abs(w) > 1e-2 && std::abs(z) > 0.05) return {z, w};
    }
}

}  // namespace

TEST_CASE("the first cycle's seeds satisfy the curve equation") {
    const Complex z = std::polar(1.0, kPi / 12.0);
    Complex z12 = 1.0;
    for (int k = 0; k < 12; ++k) z12 *= z;
    CHECK(dist(z12 - 1.0, Complex(-2.0, 0.0)) < 1e-15);
    const double c = std::cbrt(2.0);
    CHECK(std::abs(std::pow(-c, 3) + 2.0) < 1e-15);
    CHECK(trisurf::on_curve({z, Complex(-c, 0.0)}, 1e-14));
}

TEST_CASE("the base cycles close on the surface") {
    CHECK(trisurf::closure_defect(trisurf::cycle_A1()) <= 1e-10);
    CHECK(trisurf::closure_defect(trisurf::cycle_A2()) <= 1e-10);
}

TEST_CASE("the two base cycles differ only in the second seed") {
    const CyclePath a1 = trisurf::cycle_A1();
    const CyclePath a2 = trisurf::cycle_A2();
    REQUIRE(a1.segments.size() == 2);
    REQUIRE(a2.segments.size() == 2);
    for (int s = 0; s < 2; ++s) {
        CHECK(a1.segments[s].dir() == a2.segments[s].dir());
        CHECK(a1.segments[s].offset() == a2.segments[s].offset());
        CHECK(a1.segments[s].t_lo() == a2.segments[s].t_lo());
        CHECK(a1.segments[s].t_hi() == a2.segments[s].t_hi());
    }
    CHECK(dist(a1.segments[0].w_seed(), a2.segments[0].w_seed()) == 0.0);
    CHECK(dist(a1.segments[1].w_seed(),
               a2.segments[1].w_seed() * std::polar(1.0, -2.0 * kPi / 3.0)) <
          1e-15);
}

TEST_CASE("arc sheet values match the explicit branch formulas") {
    const CyclePath a1 = trisurf::cycle_A1();
    // first arc: w(t) = (2 sin 6t)^{1/3} e^{i(2t + 5π/6)}
    for (double t : {0.01, kPi / 12.0, 0.3, kPi / 6.0 - 0.01}) {
        const Complex expect = std::polar(std::cbrt(2.0 * std::sin(6.0 * t)),
                                          2.0 * t + 5.0 * kPi / 6.0);
        CHECK(dist(a1.segments[0].w_at(t), expect) < 1e-13);
    }
    // second arc (t ∈ [−π/6, 0], τ = −t):
    // w = (2 sin 6τ)^{1/3} e^{i(2τ + π/6 + 4π/3)}
    for (double tau : {0.01, kPi / 12.0, 0.3}) {
        const Complex expect =
            std::polar(std::cbrt(2.0 * std::sin(6.0 * tau)),
                       2.0 * tau + kPi / 6.0 + 4.0 * kPi / 3.0);
        CHECK(dist(a1.segments[1].w_at(-tau), expect) < 1e-13);
    }
    // and for A₂'s second arc the phase advances by a further 2π/3
    const CyclePath a2 = trisurf::cycle_A2();
    for (double tau : {0.05, 0.4}) {
        const Complex expect = a1.segments[1].w_at(-tau) *
                               std::polar(1.0, 2.0 * kPi / 3.0);
        CHECK(dist(a2.segments[1].w_at(-tau), expect) < 1e-13);
    }
}

TEST_CASE("arc sheet values agree with generic sheet continuation") {
    const CyclePath a1 = trisurf::cycle_A1();
    const ArcSegment& arc = a1.segments[0];
    const auto path = [&arc](double t) { return arc.z_at(t); };
    const auto sheet = trisurf::continue_sheet(path, arc.t_seed(),
                                               arc.t_hi() - 1e-6,
                                               arc.w_seed());
    for (double t : {kPi / 12.0, 0.35, kPi / 6.0 - 1e-5}) {
        CHECK(dist(arc.w_at(t), sheet(t)) < 1e-11);
    }
}

TEST_CASE("the endpoint-distance form of the sheet stays accurate at "
          "sub-ulp distances") {
    const ArcSegment& arc = trisurf::cycle_A1().segments[0];
    // At distance d from a branch endpoint the sheet magnitude is
    // (2 sin 6d)^{1/3} ≈ (12 d)^{1/3}; t itself has long since rounded
    // onto the endpoint.
    for (double d : {1e-12, 1e-17, 1e-20, 1e-30}) {
        const Complex w = arc.w_at(arc.t_hi(), d);
        CHECK(std::abs(w) == doctest::Approx(std::cbrt(12.0 * d)).epsilon(1e-9));
        const Complex w0 = arc.w_at(arc.t_lo(), d);
        CHECK(std::abs(w0) ==
              doctest::Approx(std::cbrt(12.0 * d)).epsilon(1e-9));
    }
}

TEST_CASE("arc construction rejects bad seeds and bad ranges") {
    CHECK_THROWS_AS(ArcSegment(1.0, 0.0, 0.0, kPi / 6.0, kPi / 12.0,
                               Complex(1.0, 0.0)),
                    trisurf::SeedOffCurve);
    CHECK_THROWS_AS(ArcSegment(1.0, 0.0, kPi / 6.0, 0.0, kPi / 12.0,
                               Complex(-std::cbrt(2.0), 0.0)),
                    trisurf::DomainError);
    // seed parameter at a branch point
    CHECK_THROWS_AS(ArcSegment(1.0, 0.0, -kPi / 6.0, kPi / 6.0, 0.0,
                               Complex(0.0, 0.0)),
                    trisurf::DomainError);
}

TEST_CASE("generate_all_cycles yields 20 closed, uniquely labeled cycles") {
    const auto cycles = trisurf::generate_all_cycles();
    REQUIRE(cycles.size() == 20);
    std::set<std::string> labels;
    for (const auto& c : cycles) {
        labels.insert(c.label);
        CHECK(trisurf::closure_defect(c) <= 1e-10);
    }
    CHECK(labels.size() == 20);
    // column order: (φᵏA₁, φᵏA₂) pairs
    CHECK(cycles[0].label == "A1");
    CHECK(cycles[1].label == "A2");
    CHECK(cycles[2].label == "B1");
    CHECK(cycles[3].label == "B2");
    CHECK(cycles[4].label == "A3");
    CHECK(cycles[5].label == "A4");
    CHECK(cycles[6].label == "B3");
    CHECK(cycles[7].label == "B4");
    CHECK(cycles[18].label == "B9");
    CHECK(cycles[19].label == "B10");
}

TEST_CASE("the rotated first cycle starts at angle pi/6") {
    const CyclePath b1 = trisurf::apply_phi(trisurf::cycle_A1(), "B1");
    const ArcSegment& first = b1.segments[0];
    CHECK(dist(first.z_at(first.t_lo()), std::polar(1.0, kPi / 6.0)) < 1e-15);
    CHECK(dist(first.z_at(first.t_hi()), std::polar(1.0, kPi / 3.0)) < 1e-15);
    CHECK(dist(first.w_seed(), Complex(-std::cbrt(2.0), 0.0)) == 0.0);
    CHECK(dist(first.z_at(first.t_seed()),
               std::polar(1.0, kPi / 12.0 + kPi / 6.0)) < 1e-15);
}

TEST_CASE("automorphisms preserve the curve and satisfy their relations") {
    const auto phi = trisurf::automorphism_phi();
    const auto phi_prime = trisurf::automorphism_phi_prime();
    const auto j = trisurf::automorphism_j();
    std::mt19937_64 rng(4242u);

    SUBCASE("images stay on the curve") {
        for (int k = 0; k < 50; ++k) {
            const SurfacePoint p = random_point(rng);
            CHECK(trisurf::on_curve(apply_automorphism(phi, p), 1e-9));
            CHECK(trisurf::on_curve(apply_automorphism(phi_prime, p), 1e-9));
            CHECK(trisurf::on_curve(apply_automorphism(j, p), 1e-9));
        }
    }
    SUBCASE("phi has order 12 and j has order 3") {
        const SurfacePoint p = random_point(rng);
        SurfacePoint q = p;
        for (int k = 0; k < 12; ++k) q = phi.action(q);
        CHECK(dist(q.z, p.z) < 1e-12);
        CHECK(dist(q.w, p.w) < 1e-12);
        q = p;
        for (int k = 0; k < 3; ++k) q = j.action(q);
        CHECK(dist(q.z, p.z) < 1e-12);
        CHECK(dist(q.w, p.w) < 1e-12);
    }
    SUBCASE("phi and j commute (their group has order dividing 36)") {
        for (int k = 0; k < 20; ++k) {
            const SurfacePoint p = random_point(rng);
            const SurfacePoint a = phi.action(j.action(p));
            const SurfacePoint b = j.action(phi.action(p));
            CHECK(dist(a.z, b.z) < 1e-13);
            CHECK(dist(a.w, b.w) < 1e-13);
        }
    }
    SUBCASE("phi_prime squares to j at 100 random points") {
        for (int k = 0; k < 100; ++k) {
            const SurfacePoint p = random_point(rng);
            const SurfacePoint twice = phi_prime.action(phi_prime.action(p));
            const SurfacePoint byj = j.action(p);
            const double scale = std::max(1.0, std::abs(p.w));
            CHECK(dist(twice.z, byj.z) < 1e-12 * std::max(1.0, std::abs(p.z)));
            CHECK(dist(twice.w, byj.w) < 1e-12 * scale);
        }
    }
    SUBCASE("phi_prime rejects z = 0") {
        CHECK_THROWS_AS(
            apply_automorphism(phi_prime, {Complex(0.0), Complex(-1.0)}),
            trisurf::DomainError);
    }
    SUBCASE("derivatives match finite differences") {
        const SurfacePoint p = random_point(rng);
        const double h = 1e-6;
        for (const auto& a : {phi, phi_prime}) {
            const Complex num =
                (a.action({p.z + h, p.w}).z - a.action({p.z - h, p.w}).z) /
                (2.0 * h);
            CHECK(dist(num, a.dz(p)) < 1e-6 * std::max(1.0, std::abs(num)));
        }
    }
    SUBCASE("composition applies right factor first") {
        const auto pp = trisurf::compose(phi_prime, j);
        const SurfacePoint p = random_point(rng);
        const SurfacePoint expect = phi_prime.action(j.action(p));
        const SurfacePoint got = pp.action(p);
        CHECK(dist(got.z, expect.z) < 1e-14);
        CHECK(dist(got.w, expect.w) < 1e-14);
    }
}
