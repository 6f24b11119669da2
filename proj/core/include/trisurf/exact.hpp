#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "trisurf/errors.hpp"

namespace trisurf {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/*
 * QSqrt3 — an element a + b·√3 of the real quadratic field Q(√3), with exact
 * rational coordinates. √3·√3 reduces to 3 eagerly, so arithmetic is closed.
 * This is the coefficient field for rotation blocks like R(−π/3) and for the
 * symmetry group's matrix entries.
 */
struct QSqrt3 {
    Rational a{0};  // rational part
    Rational b{0};  // coefficient of √3

    QSqrt3() = default;
    QSqrt3(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
    explicit QSqrt3(Rational ra) : a(std::move(ra)) {}
    explicit QSqrt3(long long n) : a(n) {}

    static QSqrt3 sqrt3() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    QSqrt3 operator-() const { return {-a, -b}; }
    QSqrt3 operator+(const QSqrt3& o) const { return {a + o.a, b + o.b}; }
    QSqrt3 operator-(const QSqrt3& o) const { return {a - o.a, b - o.b}; }
    QSqrt3 operator*(const QSqrt3& o) const {
        return {a * o.a + 3 * b * o.b, a * o.b + b * o.a};
    }
    QSqrt3& operator+=(const QSqrt3& o) { return *this = *this + o; }
    QSqrt3& operator-=(const QSqrt3& o) { return *this = *this - o; }
    QSqrt3& operator*=(const QSqrt3& o) { return *this = *this * o; }

    // Field inverse: 1/(a+b√3) = (a−b√3)/(a²−3b²). The norm a²−3b² never
    // vanishes for nonzero elements because 3 is not a rational square.
    QSqrt3 inverse() const {
        Rational n = a * a - 3 * b * b;
        if (n == 0) throw DomainError("QSqrt3: division by zero");
        return {a / n, -b / n};
    }
    QSqrt3 operator/(const QSqrt3& o) const { return *this * o.inverse(); }

    bool operator==(const QSqrt3& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QSqrt3& o) const { return !(*this == o); }

    double to_double() const {
        return trisurf::to_double(a) + trisurf::to_double(b) * std::sqrt(3.0);
    }
};

inline QSqrt3 operator*(const Rational& r, const QSqrt3& q) {
    return QSqrt3(r * q.a, r * q.b);
}

/*
 * GaussSqrt3 — an element x + i·y of Q(i,√3) with x, y ∈ Q(√3). This is the
 * exact scalar field in which all closed-form period coefficients live
 * (e.g. 1 + e^{iπ/3}, i√3).
 */
struct GaussSqrt3 {
    QSqrt3 re;
    QSqrt3 im;

    GaussSqrt3() = default;
    GaussSqrt3(QSqrt3 r, QSqrt3 i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussSqrt3(QSqrt3 r) : re(std::move(r)) {}
    explicit GaussSqrt3(long long n) : re(QSqrt3(n)) {}

    static GaussSqrt3 i() { return {QSqrt3(0LL), QSqrt3(1LL)}; }
    // e^{iπ/3} = 1/2 + i·√3/2
    static GaussSqrt3 unit_pi_3() {
        return {QSqrt3(Rational(1, 2)), QSqrt3(Rational(0), Rational(1, 2))};
    }
    // e^{2πi/3} = −1/2 + i·√3/2
    static GaussSqrt3 unit_2pi_3() {
        return {QSqrt3(Rational(-1, 2)), QSqrt3(Rational(0), Rational(1, 2))};
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    GaussSqrt3 operator-() const { return {-re, -im}; }
    GaussSqrt3 operator+(const GaussSqrt3& o) const {
        return {re + o.re, im + o.im};
    }
    GaussSqrt3 operator-(const GaussSqrt3& o) const {
        return {re - o.re, im - o.im};
    }
    GaussSqrt3 operator*(const GaussSqrt3& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussSqrt3& operator+=(const GaussSqrt3& o) { return *this = *this + o; }
    GaussSqrt3& operator-=(const GaussSqrt3& o) { return *this = *this - o; }
    GaussSqrt3& operator*=(const GaussSqrt3& o) { return *this = *this * o; }

    GaussSqrt3 conj() const { return {re, -im}; }

    bool operator==(const GaussSqrt3& o) const {
        return re == o.re && im == o.im;
    }
    bool operator!=(const GaussSqrt3& o) const { return !(*this == o); }

    std::complex<double> to_complex() const {
        return {re.to_double(), im.to_double()};
    }
};

inline GaussSqrt3 operator*(const Rational& r, const GaussSqrt3& g) {
    return GaussSqrt3(r * g.re, r * g.im);
}

/*
 * SymbolicScalar — an exact period value c_α·α + c_γ·γ with coefficients in
 * Q(i,√3). Equivalently eight rationals: the real and imaginary rational
 * coordinates over the basis {α, √3α, γ, √3γ}. β never appears: it is
 * eliminated as √3γ so the ring stays two-generator.
 *
 * Addition and scaling by Q(i,√3) are exact; there is no multiplication of
 * two SymbolicScalars (α·γ has no meaning in the period ring).
 */
class SymbolicScalar {
public:
    SymbolicScalar() = default;
    SymbolicScalar(GaussSqrt3 alpha_coeff, GaussSqrt3 gamma_coeff)
        : ca_(std::move(alpha_coeff)), cg_(std::move(gamma_coeff)) {}

    static SymbolicScalar alpha(GaussSqrt3 c = GaussSqrt3(1)) {
        return {std::move(c), GaussSqrt3()};
    }
    static SymbolicScalar gamma(GaussSqrt3 c = GaussSqrt3(1)) {
        return {GaussSqrt3(), std::move(c)};
    }

    const GaussSqrt3& alpha_coeff() const { return ca_; }
    const GaussSqrt3& gamma_coeff() const { return cg_; }

    bool is_zero() const { return ca_.is_zero() && cg_.is_zero(); }

    SymbolicScalar operator-() const { return {-ca_, -cg_}; }
    SymbolicScalar operator+(const SymbolicScalar& o) const {
        return {ca_ + o.ca_, cg_ + o.cg_};
    }
    SymbolicScalar operator-(const SymbolicScalar& o) const {
        return {ca_ - o.ca_, cg_ - o.cg_};
    }
    SymbolicScalar& operator+=(const SymbolicScalar& o) {
        return *this = *this + o;
    }
    SymbolicScalar& operator-=(const SymbolicScalar& o) {
        return *this = *this - o;
    }

    SymbolicScalar operator*(const GaussSqrt3& s) const {
        return {s * ca_, s * cg_};
    }
    SymbolicScalar operator*(const Rational& r) const {
        return {r * ca_, r * cg_};
    }
    SymbolicScalar operator*(long long n) const {
        return *this * Rational(n);
    }

    bool operator==(const SymbolicScalar& o) const {
        return ca_ == o.ca_ && cg_ == o.cg_;
    }
    bool operator!=(const SymbolicScalar& o) const { return !(*this == o); }

    // Rational coordinates of the real part over {α, √3α, γ, √3γ}.
    std::array<Rational, 4> real_coords() const {
        return {ca_.re.a, ca_.re.b, cg_.re.a, cg_.re.b};
    }
    // Rational coordinates of the imaginary part over the same basis.
    std::array<Rational, 4> imag_coords() const {
        return {ca_.im.a, ca_.im.b, cg_.im.a, cg_.im.b};
    }

    // Numeric embedding given numeric values of the two generators.
    std::complex<double> embed(double alpha_value, double gamma_value) const {
        return ca_.to_complex() * alpha_value + cg_.to_complex() * gamma_value;
    }

private:
    GaussSqrt3 ca_;  // coefficient of α
    GaussSqrt3 cg_;  // coefficient of γ
};

inline SymbolicScalar operator*(const GaussSqrt3& s, const SymbolicScalar& x) {
    return x * s;
}

// Real part of a symbolic period value, itself a (real) symbolic value:
// keeps the real components of both coefficients.
inline SymbolicScalar real_part(const SymbolicScalar& x) {
    return {GaussSqrt3(x.alpha_coeff().re), GaussSqrt3(x.gamma_coeff().re)};
}

// Imaginary part (the real symbolic value y such that x = Re x + i·y).
inline SymbolicScalar imag_part(const SymbolicScalar& x) {
    return {GaussSqrt3(x.alpha_coeff().im), GaussSqrt3(x.gamma_coeff().im)};
}

// √3 as a Q(√3) scalar, handy when building tables.
inline QSqrt3 sqrt3() { return QSqrt3::sqrt3(); }

}  // namespace trisurf
