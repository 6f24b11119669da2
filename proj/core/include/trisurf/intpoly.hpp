#pragma once

#include <complex>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "trisurf/errors.hpp"

namespace trisurf {

/*
 * IntPoly — dense univariate polynomial with 64-bit integer coefficients,
 * coefficient k of z^k. Degrees here never exceed a dozen and coefficients
 * stay tiny, so int64 arithmetic is ample. gcd is computed by the rational
 * Euclidean remainder sequence followed by content normalization, which is
 * exact and entirely adequate at these sizes.
 */
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> coeffs) : c_(coeffs) { trim(); }
    explicit IntPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
        trim();
    }

    // z^k with unit coefficient
    static IntPoly monomial(std::size_t k, long long coeff = 1) {
        std::vector<long long> c(k + 1, 0);
        c[k] = coeff;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : 0;
    }

    IntPoly operator-() const {
        std::vector<long long> r(c_);
        for (auto& v : r) v = -v;
        return IntPoly(std::move(r));
    }
    IntPoly operator+(const IntPoly& o) const {
        std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = coeff(k) + o.coeff(k);
        return IntPoly(std::move(r));
    }
    IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return IntPoly(std::move(r));
    }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    std::complex<double> eval(std::complex<double> z) const {
        std::complex<double> acc = 0.0;
        for (std::size_t k = c_.size(); k-- > 0;)
            acc = acc * z + static_cast<double>(c_[k]);
        return acc;
    }

    // gcd of the coefficients (0 for the zero polynomial)
    long long content() const {
        long long g = 0;
        for (long long v : c_) g = std::gcd(g, std::llabs(v));
        return g;
    }

    // Monic-normalized exact gcd, scaled to primitive integer coefficients
    // with positive leading coefficient; gcd(p, 0) = primitive(p).
    static IntPoly gcd(IntPoly a, IntPoly b);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<long long> c_;
};

/*
 * GaussIntPoly — polynomial with Gaussian-integer coefficients, stored as
 * real and imaginary integer polynomials. Used for the exact conformality
 * identity Σ ωₖ² = 0, where two of the four numerators carry a factor i.
 */
struct GaussIntPoly {
    IntPoly re;
    IntPoly im;

    GaussIntPoly() = default;
    GaussIntPoly(IntPoly r, IntPoly i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    GaussIntPoly operator+(const GaussIntPoly& o) const {
        return {re + o.re, im + o.im};
    }
    GaussIntPoly operator*(const GaussIntPoly& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussIntPoly squared() const { return *this * *this; }

    std::complex<double> eval(std::complex<double> z) const {
        return re.eval(z) + std::complex<double>(0, 1) * im.eval(z);
    }
};

}  // namespace trisurf
