#include "trisurf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace trisurf {

namespace {

/*
 * 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
 * (QUADPACK dqk15 constants). Positive abscissae only; the rule is
 * symmetric. Odd indices are the embedded Gauss-7 abscissae.
 */
constexpr double kx[8] = {
    0.991455371120812639206854697526329,  // Kronrod only
    0.949107912342758524526189684047851,  // Gauss
    0.864864423359769072789712788640926,  // Kronrod only
    0.741531185599394439863864773280788,  // Gauss
    0.586087235467691130294144838258730,  // Kronrod only
    0.405845151377397166906606412076961,  // Gauss
    0.207784955007898467600689403773245,  // Kronrod only
    0.000000000000000000000000000000000};
constexpr double kw[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double gw[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename V>
double norm_of(const V& v) {
    return std::abs(v);
}

template <typename V>
struct Panel {
    V value{};
    double error = 0.0;
};

// One Gauss/Kronrod evaluation on [lo, hi].
template <typename V, typename F>
Panel<V> gk15(const F& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    V fc = f(c);
    V resk = kw[7] * fc;
    V resg = gw[3] * fc;
    double resabs = kw[7] * norm_of<V>(fc);
    for (int i = 0; i < 7; ++i) {
        V f1 = f(c - h * kx[i]);
        V f2 = f(c + h * kx[i]);
        resk += kw[i] * (f1 + f2);
        resabs += kw[i] * (norm_of<V>(f1) + norm_of<V>(f2));
        if (i % 2 == 1) resg += gw[i / 2] * (f1 + f2);
    }
    // A 15-point sum cannot certify accuracy below its own summation
    // roundoff, so the estimate is floored at 50 eps times the accumulated
    // L1 mass (the QUADPACK dqk15 convention).
    const double floor_err =
        50.0 * std::numeric_limits<double>::epsilon() * resabs * std::abs(h);
    return {resk * h,
            std::max(norm_of<V>((resk - resg) * h), floor_err)};
}

/*
 * Recursive bisection with error budget proportional to interval length.
 * Leaves that cannot meet their share within max_depth are accepted with
 * their raw error; the caller enforces the global tolerance afterwards.
 * Once a panel is already fine (depth ≥ 6), a bisection that no longer
 * shrinks its error estimate means the estimator's roundoff floor has been
 * reached — descending further cannot improve anything but multiplies the
 * tree, so such panels are accepted at their floor. Real features keep
 * refining: splitting around a singular or rough spot always drops the
 * combined child error well below the stagnation bar.
 */
template <typename V, typename F>
Panel<V> adapt(const F& f, double lo, double hi, double share_per_len,
               int depth, int max_depth, Panel<V> p) {
    if (p.error <= share_per_len * (hi - lo) || depth >= max_depth) return p;
    const double mid = 0.5 * (lo + hi);
    Panel<V> pl = gk15<V>(f, lo, mid);
    Panel<V> pr = gk15<V>(f, mid, hi);
    if (depth >= 6 && pl.error + pr.error > 0.9 * p.error)
        return {pl.value + pr.value, pl.error + pr.error};
    Panel<V> l =
        adapt<V>(f, lo, mid, share_per_len, depth + 1, max_depth, pl);
    Panel<V> r =
        adapt<V>(f, mid, hi, share_per_len, depth + 1, max_depth, pr);
    return {l.value + r.value, l.error + r.error};
}

template <typename V, typename F>
Panel<V> adapt(const F& f, double lo, double hi, double share_per_len,
               int depth, int max_depth) {
    return adapt<V>(f, lo, hi, share_per_len, depth, max_depth,
                    gk15<V>(f, lo, hi));
}

template <typename V, typename F>
Panel<V> adapt_auto(const F& f, double lo, double hi,
                    const QuadratureSpec& spec) {
    Panel<V> rough = gk15<V>(f, lo, hi);
    double target =
        std::max(spec.abs_tol, spec.rel_tol * norm_of<V>(rough.value));
    // Half the budget is reserved for accumulation slack across leaves.
    double share = 0.5 * target / (hi - lo);
    return adapt<V>(f, lo, hi, share, 0, spec.max_depth, rough);
}

// Smallest m >= 1 with m(1+e) a positive integer; falls back to a power
// that makes the transformed integrand vanish at the endpoint.
int substitution_power(double e) {
    for (int m = 1; m <= 24; ++m) {
        double t = m * (1.0 + e);
        if (t >= 1.0 - 1e-9 && std::abs(t - std::round(t)) < 1e-9) return m;
    }
    return static_cast<int>(std::ceil(3.0 / (1.0 + e)));
}

// Sampled growth-rate guard at a flagged endpoint. |f| ~ d^s is estimated
// from geometric sample distances; s more than 0.1 beyond the declared
// exponent (i.e. more singular) raises NonIntegrableSingularity.
template <typename F>
void check_growth(const F& f, double endpoint, double toward, double length,
                  double declared) {
    if (declared <= -1.0)
        throw NonIntegrableSingularity(
            "declared endpoint exponent is not integrable");
    const double dir = (toward > endpoint) ? 1.0 : -1.0;
    double d = 1e-4 * length;
    double mags[3];
    for (int k = 0; k < 3; ++k) {
        mags[k] = norm_of(f(endpoint + dir * d, d));
        d /= 8.0;
    }
    if (mags[0] < 1e-300 || mags[2] < 1e-300) return;  // vanishing integrand
    // Distances shrink by 8 per step, so slope = log8(m[k]/m[k+1]).
    double s0 = std::log(mags[0] / mags[1]) / std::log(8.0);
    double s1 = std::log(mags[1] / mags[2]) / std::log(8.0);
    double slope = 0.5 * (s0 + s1);
    if (slope < declared - 0.1)
        throw NonIntegrableSingularity(
            "sampled endpoint growth exceeds declared exponent");
}

// Core driver; the integrand is always called as f(t, d) with d the
// distance from t to the nearest endpoint of [a, b].
template <typename V, typename F>
QuadResult<V> integrate_impl(const F& f, double a, double b,
                             const QuadratureSpec& spec, Endpoint left,
                             Endpoint right) {
    spec.validate();
    if (a == b) return {V{}, 0.0};

    auto exponent_of = [&](const Endpoint& e) {
        return std::isnan(e.exponent) ? spec.singular_exponent : e.exponent;
    };

    // For panels that form t directly the computed distance is accurate.
    auto direct = [&](double t) -> V {
        return f(t, std::min(std::abs(t - a), std::abs(b - t)));
    };

    // Segment integrator with at most one singular end. The substitution
    // t = anchor ± len·uᵐ is anchored at the singular endpoint; the signed
    // Jacobian keeps the result oriented lo → hi for both anchors, and the
    // endpoint distance len·uᵐ is handed to the integrand unrounded.
    auto segment = [&](double lo, double hi, bool sing_lo, bool sing_hi,
                       double e_lo, double e_hi) -> Panel<V> {
        const double len = hi - lo;
        if (!sing_lo && !sing_hi) return adapt_auto<V>(direct, lo, hi, spec);
        const double anchor = sing_lo ? lo : hi;
        const double sign = sing_lo ? 1.0 : -1.0;
        const int m = substitution_power(sing_lo ? e_lo : e_hi);
        auto g = [&, anchor, sign, m, len](double u) -> V {
            const double d = std::abs(len) * std::pow(u, m);
            double t = anchor + sign * len * std::pow(u, m);
            return f(t, d) * (len * m * std::pow(u, m - 1));
        };
        return adapt_auto<V>(g, 0.0, 1.0, spec);
    };

    Panel<V> total{};
    if (!left.singular && !right.singular) {
        total = adapt_auto<V>(direct, a, b, spec);
    } else {
        const double el = exponent_of(left), er = exponent_of(right);
        if (left.singular) check_growth(f, a, b, std::abs(b - a), el);
        if (right.singular) check_growth(f, b, a, std::abs(b - a), er);

        const double mid = 0.5 * (a + b);
        Panel<V> l = segment(a, mid, left.singular, false, el, er);
        Panel<V> r = segment(mid, b, false, right.singular, el, er);
        total = {l.value + r.value, l.error + r.error};
    }

    if (total.error >
        std::max(spec.abs_tol, spec.rel_tol * norm_of<V>(total.value))) {
        char msg[96];
        std::snprintf(msg, sizeof msg,
                      "integrate_path: error estimate %.3e above tolerance",
                      total.error);
        throw ToleranceNotMet(msg);
    }
    return {total.value, total.error};
}

}  // namespace

QuadResult<std::complex<double>> integrate_path(const ComplexIntegrand& f,
                                                double a, double b,
                                                const QuadratureSpec& spec,
                                                Endpoint left, Endpoint right) {
    return integrate_impl<std::complex<double>>(
        [&f](double t, double) { return f(t); }, a, b, spec, left, right);
}

QuadResult<double> integrate_real(const RealIntegrand& f, double a, double b,
                                  const QuadratureSpec& spec, Endpoint left,
                                  Endpoint right) {
    return integrate_impl<double>([&f](double t, double) { return f(t); }, a,
                                  b, spec, left, right);
}

QuadResult<std::complex<double>> integrate_path(const ComplexIntegrandNear& f,
                                                double a, double b,
                                                const QuadratureSpec& spec,
                                                Endpoint left, Endpoint right) {
    return integrate_impl<std::complex<double>>(f, a, b, spec, left, right);
}

QuadResult<double> integrate_real(const RealIntegrandNear& f, double a,
                                  double b, const QuadratureSpec& spec,
                                  Endpoint left, Endpoint right) {
    return integrate_impl<double>(f, a, b, spec, left, right);
}

QuadResult<double> integrate_plane(
    const std::function<double(double, double)>& f, const QuadratureSpec& spec,
    double r_split, const PlaneIntegralOptions& options) {
    spec.validate();
    if (!(r_split > 0))
        throw DomainError("integrate_plane: r_split must be positive");
    const double s = r_split;
    const double two_pi = 2.0 * std::acos(-1.0);

    QuadratureSpec inner = spec;
    inner.abs_tol = spec.abs_tol / (8.0 * two_pi);

    double worst_inner_error = 0.0;

    // Radial profile at fixed θ, with the outer region folded in.
    auto radial = [&](double theta) {
        auto g = [&](double u) {
            double fold = f(s * s / u, theta) * (s * s) / (u * u);
            return f(u, theta) + fold;
        };
        std::vector<double> cuts;
        if (options.radial_breakpoints)
            cuts = options.radial_breakpoints(theta);
        cuts.push_back(0.0);
        cuts.push_back(s);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

        double value = 0.0, error = 0.0;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            double lo = cuts[k], hi = cuts[k + 1];
            if (!(lo >= 0.0 && hi <= s && lo < hi)) continue;
            // u → 0 is the folded image of r → ∞; the integrand must decay
            // there, so avoid evaluating exactly at zero.
            if (lo == 0.0) lo = std::numeric_limits<double>::min();
            Panel<double> p = adapt_auto<double>(g, lo, hi, inner);
            value += p.value;
            error += p.error;
        }
        worst_inner_error = std::max(worst_inner_error, error);
        return value;
    };

    std::vector<double> tcuts = options.theta_breakpoints;
    tcuts.push_back(0.0);
    tcuts.push_back(two_pi);
    std::sort(tcuts.begin(), tcuts.end());
    tcuts.erase(std::unique(tcuts.begin(), tcuts.end()), tcuts.end());

    double value = 0.0, outer_error = 0.0;
    for (std::size_t k = 0; k + 1 < tcuts.size(); ++k) {
        const double lo = tcuts[k], hi = tcuts[k + 1];
        if (!(lo >= 0.0 && hi <= two_pi && lo < hi)) continue;
        const double w = hi - lo;
        // Integrate each slice through θ = lo + w·q(u) with the quintic
        // smoothstep q(u) = u³(10 − 15u + 6u²), whose Jacobian vanishes at
        // both ends. Slice endpoints land on caller breakpoints where the
        // profile may ramp like an integrable negative power of the
        // distance to the edge (e.g. the rim of an excised disc); the
        // vanishing Jacobian makes the transformed integrand smooth there,
        // where plain bisection would recurse to max_depth against an
        // endpoint feature whose panel error shrinks slower than a
        // length-proportional budget.
        auto mapped = [&](double u) {
            const double q = u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
            const double dq = 30.0 * u * u * (1.0 - u) * (1.0 - u);
            return radial(lo + w * q) * (w * dq);
        };
        Panel<double> p = adapt_auto<double>(mapped, 0.0, 1.0, spec);
        value += p.value;
        outer_error += p.error;
    }

    return {value, outer_error + two_pi * worst_inner_error};
}

}  // namespace trisurf
