#include "trisurf/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trisurf {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex rhs(Complex z) {
    Complex z6 = z * z * z;
    z6 *= z6;
    return z6 * z6 - 1.0;
}

// Distance from the nearest cube root to the reference value, together with
// the runner-up distance, used by the continuation guard.
struct RootChoice {
    Complex nearest;
    double d_nearest;
    double d_second;
};

RootChoice nearest_root(Complex z, Complex w_ref) {
    const auto roots = sheet_values(z);
    RootChoice rc{roots[0], std::abs(roots[0] - w_ref),
                  std::numeric_limits<double>::infinity()};
    for (int k = 1; k < 3; ++k) {
        const double d = std::abs(roots[k] - w_ref);
        if (d < rc.d_nearest) {
            rc.d_second = rc.d_nearest;
            rc.d_nearest = d;
            rc.nearest = roots[k];
        } else {
            rc.d_second = std::min(rc.d_second, d);
        }
    }
    return rc;
}

}  // namespace

bool on_curve(const SurfacePoint& p, double tol) {
    const double z12 = std::pow(std::abs(p.z), 12.0);
    return std::abs(p.w * p.w * p.w - rhs(p.z)) <= tol * std::max(1.0, z12);
}

std::array<Complex, 3> sheet_values(Complex z) {
    const Complex v = rhs(z);
    const double mag = std::cbrt(std::abs(v));
    const double base = std::arg(v) / 3.0;
    std::array<Complex, 3> roots;
    for (int k = 0; k < 3; ++k) {
        double a = base + 2.0 * kPi * k / 3.0;
        // reduce to the principal range so sorting is by principal argument
        if (a > kPi) a -= 2.0 * kPi;
        roots[k] = std::polar(mag, a);
    }
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return std::arg(a) < std::arg(b);
    });
    return roots;
}

PsiValue psi(const SurfacePoint& p) {
    if (p.w == 0.0)
        throw BranchPointSingularity("psi: differentials have a pole at w = 0");
    const Complex z = p.z;
    const Complex i(0.0, 1.0);
    const Complex z2 = z * z;
    const Complex z4 = z2 * z2;
    const Complex z5 = z4 * z;
    const Complex z6 = z5 * z;
    const Complex w2 = p.w * p.w;
    return PsiValue{{(1.0 - z6) / w2, i * (1.0 + z6) / w2, (z5 + z) / w2,
                     i * (z5 - z) / w2}};
}

ContinuedSheet::ContinuedSheet(std::function<Complex(double)> z_path,
                               double t0, double t1, Complex w_seed)
    : path_(std::move(z_path)), t0_(t0), t1_(t1) {
    const Complex z_seed = path_(t0_);
    const double scale = std::max(1.0, std::pow(std::abs(z_seed), 12.0));
    if (std::abs(w_seed * w_seed * w_seed - rhs(z_seed)) > 1e-9 * scale)
        throw SeedOffCurve("continue_sheet: seed violates the curve equation");
    initial_step_ = std::abs(t1_ - t0_) / 64.0;
    if (initial_step_ == 0.0) initial_step_ = 1.0;  // degenerate interval

    // Walk the whole parameter range once, recording every accepted step so
    // evaluations can resume nearby instead of re-walking from the seed.
    checkpoints_.emplace_back(t0_, w_seed);
    const double dir = (t1_ >= t0_) ? 1.0 : -1.0;
    double t = t0_;
    Complex w = w_seed;
    double h = initial_step_;
    const double h_min = initial_step_ * 1e-12;
    while (dir * (t1_ - t) > 0.0) {
        double t_next = t + dir * h;
        if (dir * (t_next - t1_) > 0.0) t_next = t1_;
        const RootChoice rc = nearest_root(path_(t_next), w);
        const double guard = 0.5 * std::abs(w);
        if (rc.d_nearest < guard) {
            t = t_next;
            w = rc.nearest;
            checkpoints_.emplace_back(t, w);
            h = std::min(h * 1.5, initial_step_);
            continue;
        }
        if (h <= h_min) {
            if (rc.d_second - rc.d_nearest <= 1e-9 * std::abs(w))
                throw AmbiguousContinuation(
                    "continue_sheet: two cube roots equidistant at minimal "
                    "step; path passes too close to a branch point");
            throw AmbiguousContinuation(
                "continue_sheet: sheet-jump guard tripped at minimal step");
        }
        h *= 0.5;
    }
}

Complex ContinuedSheet::walk(double t_from, Complex w_from,
                             double t_to) const {
    const double dir = (t_to >= t_from) ? 1.0 : -1.0;
    double t = t_from;
    Complex w = w_from;
    double h = initial_step_;
    const double h_min = initial_step_ * 1e-12;
    while (dir * (t_to - t) > 0.0) {
        double t_next = t + dir * h;
        if (dir * (t_next - t_to) > 0.0) t_next = t_to;
        const RootChoice rc = nearest_root(path_(t_next), w);
        if (rc.d_nearest < 0.5 * std::abs(w)) {
            t = t_next;
            w = rc.nearest;
            h = std::min(h * 1.5, initial_step_);
            continue;
        }
        if (h <= h_min)
            throw AmbiguousContinuation(
                "continue_sheet: sheet-jump guard tripped at minimal step");
        h *= 0.5;
    }
    return w;
}

Complex ContinuedSheet::operator()(double t) const {
    const double lo = std::min(t0_, t1_);
    const double hi = std::max(t0_, t1_);
    if (t < lo - 1e-12 || t > hi + 1e-12)
        throw DomainError("ContinuedSheet: parameter outside the path range");
    // Checkpoints are ordered by walk direction; find the nearest one.
    const auto cmp = [this](const std::pair<double, Complex>& a, double v) {
        return (t1_ >= t0_) ? a.first < v : a.first > v;
    };
    auto it = std::lower_bound(checkpoints_.begin(), checkpoints_.end(), t, cmp);
    if (it == checkpoints_.end()) --it;
    if (it != checkpoints_.begin()) {
        auto prev = std::prev(it);
        if (std::abs(prev->first - t) < std::abs(it->first - t)) it = prev;
    }
    return walk(it->first, it->second, t);
}

ContinuedSheet continue_sheet(std::function<Complex(double)> z_path, double t0,
                              double t1, Complex w_seed) {
    return ContinuedSheet(std::move(z_path), t0, t1, w_seed);
}

std::array<GaussIntPoly, 4> psi_numerators() {
    const IntPoly one{1};
    const IntPoly z6 = IntPoly::monomial(6);
    const IntPoly z5_plus_z = IntPoly::monomial(5) + IntPoly::monomial(1);
    const IntPoly z5_minus_z = IntPoly::monomial(5) - IntPoly::monomial(1);
    return {GaussIntPoly{one - z6, IntPoly{}},
            GaussIntPoly{IntPoly{}, one + z6},
            GaussIntPoly{z5_plus_z, IntPoly{}},
            GaussIntPoly{IntPoly{}, z5_minus_z}};
}

bool conformal_identity_exact() {
    GaussIntPoly sum;
    for (const auto& n : psi_numerators()) sum = sum + n.squared();
    return sum.is_zero();
}

bool check_no_common_zeros(const std::vector<IntPoly>& numerators) {
    IntPoly g;  // zero polynomial: gcd identity element
    bool any_nonzero = false;
    for (const auto& p : numerators) {
        if (p.is_zero()) continue;
        any_nonzero = true;
        g = IntPoly::gcd(g, p);
        if (g.degree() == 0) return true;  // coprime already
    }
    if (!any_nonzero) return false;  // every point is a common zero
    return g.degree() == 0;
}

bool check_no_common_zeros() {
    const auto nums = psi_numerators();
    std::vector<IntPoly> zpolys;
    for (const auto& n : nums) {
        // each numerator is a unit times an integer polynomial
        zpolys.push_back(n.re.is_zero() ? n.im : n.re);
    }
    if (!check_no_common_zeros(zpolys)) return false;
    // At the branch points w = 0 every component shares the pole 1/w²; the
    // differentials could only vanish simultaneously if all numerators did.
    for (int k = 0; k < 12; ++k) {
        const Complex zeta = std::polar(1.0, 2.0 * kPi * k / 12.0);
        double best = 0.0;
        for (const auto& n : nums) best = std::max(best, std::abs(n.eval(zeta)));
        if (best < 1e-6) return false;
    }
    return true;
}

Obstruction trigonal_obstruction(int g) {
    if (g <= 3) return {false, 0, "not trigonal"};
    if (g % 3 != 1) return {false, 0, "genus ≡ 0 or 2 mod 3"};
    return {true, (g - 1) / 3, ""};
}

}  // namespace trisurf
