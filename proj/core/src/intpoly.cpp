#include "trisurf/intpoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace trisurf {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

std::vector<Rat> to_rational(const IntPoly& p) {
    std::vector<Rat> r(static_cast<std::size_t>(p.degree() + 1));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = p.coeff(k);
    return r;
}

void trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Euclidean remainder of a by b over Q (b nonzero).
std::vector<Rat> rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k)
            a[shift + k] -= q * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

}  // namespace

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    auto pa = to_rational(a);
    auto pb = to_rational(b);
    while (!pb.empty()) {
        auto r = rem(pa, pb);
        pa = std::move(pb);
        pb = std::move(r);
    }
    if (pa.empty()) return {};

    // Clear denominators and divide by integer content.
    Int denom_lcm = 1;
    for (const auto& q : pa)
        denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(q));
    std::vector<Int> scaled(pa.size());
    for (std::size_t k = 0; k < pa.size(); ++k)
        scaled[k] = numerator(pa[k]) * (denom_lcm / denominator(pa[k]));
    Int content = 0;
    for (const auto& v : scaled)
        content = boost::multiprecision::gcd(content, abs(v));
    if (scaled.back() < 0) content = -content;

    std::vector<long long> out(scaled.size());
    for (std::size_t k = 0; k < scaled.size(); ++k)
        out[k] = static_cast<long long>(scaled[k] / content);
    return IntPoly(std::move(out));
}

}  // namespace trisurf
