#include "doctest.h"

#include "trisurf/intpoly.hpp"

using namespace trisurf;

TEST_CASE("IntPoly arithmetic and evaluation") {
    IntPoly p{1, 0, -1};  // 1 − z²
    IntPoly q{1, 1};      // 1 + z

    CHECK((p + q) == IntPoly{2, 1, -1});
    CHECK((p * q) == IntPoly{1, 1, -1, -1});
    CHECK(p.degree() == 2);
    CHECK(IntPoly{}.is_zero());
    CHECK(IntPoly{0, 0}.is_zero());  // trailing zeros trim to empty

    auto v = p.eval({2.0, 0.0});
    CHECK(v.real() == doctest::Approx(-3.0));
}

TEST_CASE("IntPoly gcd is primitive with positive leading coefficient") {
    IntPoly a{-1, 0, 0, 0, 0, 0, 1};  // z⁶ − 1
    IntPoly b{1, 0, 0, 0, 0, 0, 1};   // z⁶ + 1
    CHECK(IntPoly::gcd(a, b) == IntPoly{1});

    // Common factor (z − 1): gcd(z²−1, z²−2z+1) = z − 1.
    CHECK(IntPoly::gcd(IntPoly{-1, 0, 1}, IntPoly{1, -2, 1}) ==
          IntPoly{-1, 1});

    // Content is stripped: gcd(2z, 4z²) = z.
    CHECK(IntPoly::gcd(IntPoly{0, 2}, IntPoly{0, 0, 4}) == IntPoly{0, 1});

    CHECK(IntPoly::gcd(a, IntPoly{}) == a);
}

TEST_CASE("four differential numerators share no common root") {
    IntPoly n1{1, 0, 0, 0, 0, 0, -1};  // 1 − z⁶
    IntPoly n2{1, 0, 0, 0, 0, 0, 1};   // 1 + z⁶
    IntPoly n3{0, 1, 0, 0, 0, 1};      // z⁵ + z
    IntPoly n4{0, -1, 0, 0, 0, 1};     // z⁵ − z

    IntPoly g = IntPoly::gcd(IntPoly::gcd(n1, n2), IntPoly::gcd(n3, n4));
    CHECK(g == IntPoly{1});
}

TEST_CASE("sum of squared differentials vanishes identically") {
    // Ψ components: (1−z⁶), i(1+z⁶), (z⁵+z), i(z⁵−z) over a common 1/w²;
    // conformality is the integer-polynomial identity Σ components² = 0.
    GaussIntPoly c1{IntPoly{1, 0, 0, 0, 0, 0, -1}, IntPoly{}};
    GaussIntPoly c2{IntPoly{}, IntPoly{1, 0, 0, 0, 0, 0, 1}};
    GaussIntPoly c3{IntPoly{0, 1, 0, 0, 0, 1}, IntPoly{}};
    GaussIntPoly c4{IntPoly{}, IntPoly{0, -1, 0, 0, 0, 1}};

    GaussIntPoly sum =
        c1.squared() + c2.squared() + c3.squared() + c4.squared();
    CHECK(sum.is_zero());
}
