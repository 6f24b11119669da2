#include "trisurf/homology.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace trisurf {

namespace {

constexpr double kPi = 3.14159265358979323846;

int pair_code(int i, int j) {
    if (i < 1 || j <= i || j > 4)
        throw DomainError("wedge_density: index pair must satisfy 1<=i<j<=4");
    return 10 * i + j;
}

// N/Q^{2/3} with N the pair's numerator polynomial and
// Q = (r¹²−1)² + 4r¹²sin²(6θ) = |z¹²−1|², both evaluated in the regime
// that avoids overflow: direct powers for r ≤ 2, inverse powers above.
double density_eval(int code, double r, double theta) {
    const double s6 = std::sin(6.0 * theta);
    const double sin_t = std::sin(theta), cos_t = std::cos(theta);
    const double sin5 = std::sin(5.0 * theta), cos5 = std::cos(5.0 * theta);

    if (r <= 2.0) {
        const double r2 = r * r;
        const double r4 = r2 * r2;
        const double r5 = r4 * r;
        const double r10 = r5 * r5;
        const double r12 = r10 * r2;
        const double dm = r12 - 1.0;
        const double q = dm * dm + 4.0 * r12 * s6 * s6;
        if (q < 1e-24)
            throw SingularPoint(
                "wedge_density: point lies on the branch locus");
        const double q23 = std::pow(q, 2.0 / 3.0);
        switch (code) {
            case 12: return -3.0 * (1.0 - r12) / q23;
            case 34: return 3.0 * (r2 - r10) / q23;
            case 13:
                return -3.0 *
                       (r * sin_t * (1.0 + r10) + r5 * sin5 * (1.0 + r2)) /
                       q23;
            case 14:
                return 3.0 *
                       (r * cos_t * (1.0 + r10) - r5 * cos5 * (1.0 + r2)) /
                       q23;
            case 23:
                return 3.0 *
                       (r * cos_t * (1.0 + r10) + r5 * cos5 * (1.0 + r2)) /
                       q23;
            case 24:
                return 3.0 *
                       (r * sin_t * (1.0 + r10) - r5 * sin5 * (1.0 + r2)) /
                       q23;
        }
    } else {
        // Divide numerator and denominator by r¹⁶: with t = 1/r < 1/2 the
        // scaled Q/r²⁴ = (1−t¹²)² + 4t¹²sin²6θ stays near 1.
        const double t = 1.0 / r;
        const double t2 = t * t;
        const double t4 = t2 * t2;
        const double t5 = t4 * t;
        const double t6 = t5 * t;
        const double t9 = t5 * t4;
        const double t11 = t9 * t2;
        const double t12 = t11 * t;
        const double t14 = t12 * t2;
        const double t15 = t14 * t;
        const double t16 = t15 * t;
        const double dm = 1.0 - t12;
        const double q_scaled = dm * dm + 4.0 * t12 * s6 * s6;
        const double q23 = std::pow(q_scaled, 2.0 / 3.0);
        switch (code) {
            case 12: return -3.0 * (t16 - t4) / q23;
            case 34: return 3.0 * (t14 - t6) / q23;
            case 13:
                return -3.0 *
                       (sin_t * (t15 + t5) + sin5 * (t11 + t9)) / q23;
            case 14:
                return 3.0 * (cos_t * (t15 + t5) - cos5 * (t11 + t9)) / q23;
            case 23:
                return 3.0 * (cos_t * (t15 + t5) + cos5 * (t11 + t9)) / q23;
            case 24:
                return 3.0 * (sin_t * (t15 + t5) - sin5 * (t11 + t9)) / q23;
        }
    }
    throw DomainError("wedge_density: index pair must satisfy 1<=i<j<=4");
}

struct RootTable {
    double c[12];
    double s[12];
    RootTable() {
        for (int k = 0; k < 12; ++k) {
            c[k] = std::cos(k * kPi / 6.0);
            s[k] = std::sin(k * kPi / 6.0);
        }
    }
};
const RootTable kRoots;

// Inversion-symmetric excision: true when z = re^{iθ} or its inversion
// image (1/r)e^{iθ} lies within eps of a 12th root of unity.
bool excised(double r, double theta, double eps) {
    const double eps2 = eps * eps;
    const double cos_t = std::cos(theta), sin_t = std::sin(theta);
    // The inversion image of a point at (or extremely near) the origin is
    // at infinity — far from every root — so degrade its check gracefully.
    const double ri = (r > 1e-100) ? 1.0 / r : 0.0;
    const double r2 = r * r + 1.0, ri2 = ri * ri + 1.0;
    for (int k = 0; k < 12; ++k) {
        const double cd = cos_t * kRoots.c[k] + sin_t * kRoots.s[k];
        if (r2 - 2.0 * r * cd < eps2) return true;
        if (ri2 - 2.0 * ri * cd < eps2) return true;
    }
    return false;
}

// Radii in (0,1) where the masked region's boundary crosses the ray at
// angle θ — the entry/exit radii of the excision disks and their
// inversion images.
std::vector<double> radial_cuts(double theta, double eps) {
    std::vector<double> cuts;
    for (int k = 0; k < 12; ++k) {
        const double delta = std::remainder(theta - k * kPi / 6.0, 2.0 * kPi);
        const double s = std::sin(delta);
        const double disc = eps * eps - s * s;
        if (disc <= 0.0 || std::cos(delta) <= 0.0) continue;
        const double root = std::sqrt(disc);
        const double lo = std::cos(delta) - root;
        const double hi = std::cos(delta) + root;
        for (double c : {lo, hi, 1.0 / lo, 1.0 / hi})
            if (c > 0.0 && c < 1.0) cuts.push_back(c);
    }
    return cuts;
}

}  // namespace

double wedge_density_polar(int i, int j, double r, double theta) {
    if (!(r >= 0.0))
        throw DomainError("wedge_density: radius must be nonnegative");
    return density_eval(pair_code(i, j), r, theta);
}

double wedge_density(int i, int j, std::complex<double> z) {
    return wedge_density_polar(i, j, std::abs(z), std::arg(z));
}

PairingResult verify_pairing(int i, int j, const HomologyOptions& opts) {
    const int code = pair_code(i, j);
    const double eps = opts.excision_radius;
    if (!(eps > 0.0 && eps < 0.1))
        throw DomainError("verify_pairing: excision radius out of range");

    const auto masked_density = [code, eps](double r, double theta) {
        if (excised(r, theta, eps)) return 0.0;
        return density_eval(code, r, theta) * r;
    };
    const auto masked_abs = [&masked_density](double r, double theta) {
        return std::abs(masked_density(r, theta));
    };

    PlaneIntegralOptions popts;
    popts.radial_breakpoints = [eps](double theta) {
        return radial_cuts(theta, eps);
    };
    const double half_width = std::asin(eps);
    for (int k = 0; k <= 12; ++k) {
        const double a = k * kPi / 6.0;
        popts.theta_breakpoints.push_back(a - half_width);
        popts.theta_breakpoints.push_back(a);
        popts.theta_breakpoints.push_back(a + half_width);
    }

    const auto value = integrate_plane(masked_density, opts.quad, 1.0, popts);
    const auto scale = integrate_plane(masked_abs, opts.quad, 1.0, popts);

    PairingResult out;
    out.i = i;
    out.j = j;
    out.integral = value.value;
    out.scale = scale.value;
    out.quad_error = value.error + scale.error;
    return out;
}

std::array<PairingResult, 6> verify_homological_triviality(
    const HomologyOptions& opts) {
    std::array<PairingResult, 6> out;
    int slot = 0;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) out[slot++] = verify_pairing(i, j, opts);
    return out;
}

}  // namespace trisurf
