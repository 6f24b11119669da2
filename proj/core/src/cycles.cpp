#include "trisurf/cycles.hpp"

#include <cmath>
#include <limits>

namespace trisurf {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

ArcSegment::ArcSegment(double dir, double offset, double t_lo, double t_hi,
                       double t_seed, Complex w_seed)
    : dir_(dir), offset_(offset), t_lo_(t_lo), t_hi_(t_hi), t_seed_(t_seed),
      w_seed_(w_seed) {
    if (!(t_lo_ < t_hi_))
        throw DomainError("ArcSegment: empty parameter range");
    if (!(t_lo_ < t_seed_ && t_seed_ < t_hi_))
        throw DomainError("ArcSegment: seed parameter outside the arc");
    if (std::abs(std::abs(dir_) - 1.0) > 0.0)
        throw DomainError("ArcSegment: direction must be +1 or -1");

    const double x_seed = phase_x(t_seed_);
    const double s_seed = std::sin(x_seed);
    if (std::abs(s_seed) < 1e-9)
        throw DomainError("ArcSegment: seed parameter sits on a branch point");
    sigma_ = s_seed > 0.0 ? 1 : -1;

    // Pick the cube-root branch whose phase matches the seed, then confirm
    // the seed value itself.
    const double mag = std::cbrt(2.0 * std::abs(s_seed));
    int best_m = 0;
    double best_err = std::numeric_limits<double>::infinity();
    for (int m = 0; m < 3; ++m) {
        const double theta =
            (x_seed + sigma_ * kPi / 2.0 + 2.0 * kPi * m) / 3.0;
        const double err = std::abs(std::polar(mag, theta) - w_seed_);
        if (err < best_err) {
            best_err = err;
            best_m = m;
        }
    }
    m_ = best_m;
    if (best_err > 1e-9 * std::max(1.0, std::abs(w_seed_)))
        throw SeedOffCurve("ArcSegment: seed violates the curve equation");

    const auto classify = [](double x, bool* branch, int* parity) {
        const long long k = std::llround(x / kPi);
        *branch = std::abs(x - static_cast<double>(k) * kPi) < 1e-9;
        *parity = (k % 2 == 0) ? 1 : -1;
    };
    classify(phase_x(t_lo_), &lo_branch_, &parity_lo_);
    classify(phase_x(t_hi_), &hi_branch_, &parity_hi_);
}

Complex ArcSegment::z_at(double t) const {
    return std::polar(1.0, dir_ * t + offset_);
}

Complex ArcSegment::dz_at(double t) const {
    return Complex(0.0, dir_) * z_at(t);
}

Complex ArcSegment::w_at(double t, double d) const {
    // Vanishing factor |sin X|, taken from the endpoint distance when the
    // nearer endpoint is a branch point: there X = kπ ± 6d exactly on the
    // ideal arc, so |sin X| = sin(6d) free of cancellation.
    const bool near_lo = (t - t_lo_) <= (t_hi_ - t);
    double abs_sin;
    if (near_lo && lo_branch_) {
        abs_sin = std::abs(std::sin(6.0 * d));
    } else if (!near_lo && hi_branch_) {
        abs_sin = std::abs(std::sin(6.0 * d));
    } else {
        abs_sin = std::abs(std::sin(phase_x(t)));
    }
    const double theta =
        (phase_x(t) + sigma_ * kPi / 2.0 + 2.0 * kPi * m_) / 3.0;
    return std::polar(std::cbrt(2.0 * abs_sin), theta);
}

Complex ArcSegment::w_at(double t) const {
    return w_at(t, std::min(t - t_lo_, t_hi_ - t));
}

ArcSegment ArcSegment::rotated() const {
    return ArcSegment(dir_, offset_ + kPi / 6.0, t_lo_, t_hi_, t_seed_,
                      w_seed_);
}

double closure_defect(const CyclePath& c) {
    if (c.segments.empty()) throw DomainError("closure_defect: empty cycle");
    double worst = 0.0;
    const std::size_t n = c.segments.size();
    for (std::size_t i = 0; i < n; ++i) {
        const ArcSegment& cur = c.segments[i];
        const ArcSegment& nxt = c.segments[(i + 1) % n];
        worst = std::max(worst, std::abs(cur.z_at(cur.t_hi()) -
                                         nxt.z_at(nxt.t_lo())));
        // Over a branch point the cover is totally ramified — there is one
        // surface point, and both one-sided sheet limits vanish.
        const Complex w_end =
            cur.ends_at_branch() ? Complex(0.0) : cur.w_at(cur.t_hi());
        const Complex w_begin =
            nxt.starts_at_branch() ? Complex(0.0) : nxt.w_at(nxt.t_lo());
        worst = std::max(worst, std::abs(w_end - w_begin));
    }
    return worst;
}

CyclePath cycle_A1() {
    const double cbrt2 = std::cbrt(2.0);
    CyclePath c;
    c.label = "A1";
    c.segments.emplace_back(1.0, 0.0, 0.0, kPi / 6.0, kPi / 12.0,
                            Complex(-cbrt2, 0.0));
    c.segments.emplace_back(-1.0, 0.0, -kPi / 6.0, 0.0, -kPi / 12.0,
                            -cbrt2 * std::polar(1.0, 2.0 * kPi / 3.0));
    return c;
}

CyclePath cycle_A2() {
    const double cbrt2 = std::cbrt(2.0);
    CyclePath c;
    c.label = "A2";
    c.segments.emplace_back(1.0, 0.0, 0.0, kPi / 6.0, kPi / 12.0,
                            Complex(-cbrt2, 0.0));
    c.segments.emplace_back(-1.0, 0.0, -kPi / 6.0, 0.0, -kPi / 12.0,
                            -cbrt2 * std::polar(1.0, 4.0 * kPi / 3.0));
    return c;
}

CyclePath apply_phi(const CyclePath& c, const std::string& new_label) {
    CyclePath out;
    out.label = new_label;
    out.segments.reserve(c.segments.size());
    for (const auto& seg : c.segments) out.segments.push_back(seg.rotated());
    return out;
}

std::vector<CyclePath> generate_all_cycles() {
    std::vector<CyclePath> cycles;
    cycles.reserve(20);
    cycles.push_back(cycle_A1());
    cycles.push_back(cycle_A2());
    for (int k = 1; k <= 9; ++k) {
        // pair k is (φᵏ A₁, φᵏ A₂): odd k are the B's, even k the later A's
        const int pair = k / 2 + 1;
        const std::string l1 = (k % 2 == 1) ? "B" + std::to_string(2 * pair - 1)
                                            : "A" + std::to_string(2 * pair - 1);
        const std::string l2 = (k % 2 == 1) ? "B" + std::to_string(2 * pair)
                                            : "A" + std::to_string(2 * pair);
        cycles.push_back(apply_phi(cycles[2 * (k - 1)], l1));
        cycles.push_back(apply_phi(cycles[2 * (k - 1) + 1], l2));
    }
    for (const auto& c : cycles) {
        if (closure_defect(c) > 1e-10)
            throw NonClosure("generate_all_cycles: cycle " + c.label +
                             " fails to close on the surface");
    }
    return cycles;
}

Automorphism automorphism_phi() {
    return {"phi",
            [](const SurfacePoint& p) -> SurfacePoint {
                return {std::polar(1.0, kPi / 6.0) * p.z, p.w};
            },
            [](const SurfacePoint&) -> Complex {
                return std::polar(1.0, kPi / 6.0);
            }};
}

Automorphism automorphism_phi_prime() {
    return {"phi_prime",
            [](const SurfacePoint& p) -> SurfacePoint {
                if (p.z == 0.0)
                    throw DomainError("phi_prime: undefined at z = 0");
                const Complex z2 = p.z * p.z;
                const Complex z4 = z2 * z2;
                return {1.0 / p.z, std::polar(1.0, kPi / 3.0) * p.w / z4};
            },
            [](const SurfacePoint& p) -> Complex {
                if (p.z == 0.0)
                    throw DomainError("phi_prime: undefined at z = 0");
                return -1.0 / (p.z * p.z);
            }};
}

Automorphism automorphism_j() {
    return {"j",
            [](const SurfacePoint& p) -> SurfacePoint {
                return {p.z, std::polar(1.0, 2.0 * kPi / 3.0) * p.w};
            },
            [](const SurfacePoint&) -> Complex { return 1.0; }};
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    return {a.name + "∘" + b.name,
            [a, b](const SurfacePoint& p) { return a.action(b.action(p)); },
            [a, b](const SurfacePoint& p) {
                return a.dz(b.action(p)) * b.dz(p);
            }};
}

SurfacePoint apply_automorphism(const Automorphism& a, const SurfacePoint& p) {
    const SurfacePoint q = a.action(p);
    if (!on_curve(q, 1e-6))
        throw DomainError("apply_automorphism: image of " + a.name +
                          " left the curve (input off-curve?)");
    return q;
}

}  // namespace trisurf
