#include "trisurf/periods.hpp"

#include <cmath>
#include <exception>
#include <thread>

namespace trisurf {

namespace {

// Rotation blocks of the transport matrix diag(R(π/2), R(−π/3)) as exact
// Q(√3) scalars: R(π/2) = [[0,−1],[1,0]], R(−π/3) = [[1/2, √3/2],[−√3/2, 1/2]].
const QSqrt3 kHalf{Rational(1, 2), Rational(0)};
const QSqrt3 kRootHalf{Rational(0), Rational(1, 2)};  // √3/2

SymbolicScalar times(const SymbolicScalar& s, const QSqrt3& q) {
    return s * GaussSqrt3(q);
}

}  // namespace

GaussSqrt3 scalar_c1() { return GaussSqrt3(1) + GaussSqrt3::unit_pi_3(); }

GaussSqrt3 scalar_c2() {
    return GaussSqrt3::unit_2pi_3() + GaussSqrt3::unit_pi_3();  // = i·√3
}

namespace {

std::array<SymbolicScalar, 4> scaled_base_column(const GaussSqrt3& c) {
    // c · v₁ with v₁ = (α, −α, √3iγ, −iγ)
    const GaussSqrt3 i = GaussSqrt3::i();
    const GaussSqrt3 root3{QSqrt3::sqrt3()};
    return {SymbolicScalar::alpha(c), SymbolicScalar::alpha(-c),
            SymbolicScalar::gamma(c * i * root3), SymbolicScalar::gamma(-(c * i))};
}

}  // namespace

std::array<SymbolicScalar, 4> a1_period_symbolic() {
    return scaled_base_column(scalar_c1());
}

std::array<SymbolicScalar, 4> a2_period_symbolic() {
    return scaled_base_column(scalar_c2());
}

std::array<SymbolicScalar, 4> transport_column(
    const std::array<SymbolicScalar, 4>& col) {
    const GaussSqrt3 u = GaussSqrt3::unit_2pi_3();
    std::array<SymbolicScalar, 4> m;
    m[0] = -col[1];
    m[1] = col[0];
    m[2] = times(col[2], kHalf) + times(col[3], kRootHalf);
    m[3] = times(col[2], -kRootHalf) + times(col[3], kHalf);
    for (auto& s : m) s = s * u;
    return m;
}

Matrix<SymbolicScalar> period_matrix_symbolic() {
    Matrix<SymbolicScalar> omega(4, 20);
    std::array<SymbolicScalar, 4> col1 = a1_period_symbolic();
    std::array<SymbolicScalar, 4> col2 = a2_period_symbolic();
    for (int k = 0; k < 10; ++k) {
        if (k > 0) {
            col1 = transport_column(col1);
            col2 = transport_column(col2);
        }
        for (int i = 0; i < 4; ++i) {
            omega(i, 2 * k) = col1[i];
            omega(i, 2 * k + 1) = col2[i];
        }
    }
    return omega;
}

PeriodValue period_numeric(const CyclePath& c, int component,
                           const QuadratureSpec& spec) {
    if (component < 0 || component > 3)
        throw DomainError("period_numeric: component index out of range");
    PeriodValue total;
    for (const auto& seg : c.segments) {
        const auto f = [&seg, component](double t, double d) {
            const Complex w = seg.w_at(t, d);
            return psi({seg.z_at(t), w}).components[component] *
                   seg.dz_at(t);
        };
        const Endpoint lo = seg.starts_at_branch() ? Endpoint::branch()
                                                   : Endpoint::regular();
        const Endpoint hi = seg.ends_at_branch() ? Endpoint::branch()
                                                 : Endpoint::regular();
        const auto r = integrate_path(ComplexIntegrandNear(f), seg.t_lo(),
                                      seg.t_hi(), spec, lo, hi);
        total.value += r.value;
        total.error += r.error;
    }
    return total;
}

std::array<PeriodValue, 4> period_vector_numeric(const CyclePath& c,
                                                 const QuadratureSpec& spec) {
    std::array<PeriodValue, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = period_numeric(c, i, spec);
    return out;
}

PeriodMatrix assemble_period_matrix(const QuadratureSpec& spec, double tol,
                                    int jobs) {
    if (jobs < 1) throw DomainError("assemble_period_matrix: jobs must be >= 1");
    const auto cycles = generate_all_cycles();
    PeriodMatrix pm;
    pm.numeric = Matrix<std::complex<double>>(4, 20);
    pm.symbolic = period_matrix_symbolic();
    for (const auto& c : cycles) pm.labels.push_back(c.label);

    std::vector<double> col_error(20, 0.0);
    const auto run_column = [&](int j) {
        const auto vec = period_vector_numeric(cycles[j], spec);
        double err = 0.0;
        for (int i = 0; i < 4; ++i) {
            pm.numeric(i, j) = vec[i].value;
            err = std::max(err, vec[i].error);
        }
        col_error[j] = err;
    };

    if (jobs == 1) {
        for (int j = 0; j < 20; ++j) run_column(j);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(jobs);
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t]() {
                try {
                    for (int j = t; j < 20; j += jobs) run_column(j);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    for (double e : col_error) pm.max_quad_error = std::max(pm.max_quad_error, e);

    const LatticeConstants lc = lattice_constants(spec);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 20; ++j) {
            const std::complex<double> closed =
                pm.symbolic(i, j).embed(lc.alpha, lc.gamma);
            pm.max_residual = std::max(pm.max_residual,
                                       std::abs(pm.numeric(i, j) - closed));
        }
    if (pm.max_residual > tol)
        throw MismatchError(
            "assemble_period_matrix: numeric and closed-form periods "
            "disagree beyond tolerance");
    return pm;
}

BetaGammaCertificate verify_beta_gamma_relation(const QuadratureSpec& spec) {
    const LatticeConstants lc = lattice_constants(spec);
    BetaGammaCertificate cert{};
    cert.relation_residual =
        std::abs(lc.beta - std::sqrt(3.0) * lc.gamma) / lc.beta;

    // φ⁵(A₁): five rotations of the first base cycle.
    CyclePath c = cycle_A1();
    for (int k = 0; k < 5; ++k) c = apply_phi(c, "B5");
    const PeriodValue third = period_numeric(c, 2, spec);
    cert.integral = third.value;

    const double via_beta = std::sqrt(3.0) * lc.beta;
    const double via_mixed =
        std::sqrt(3.0) * (lc.beta + std::sqrt(3.0) * lc.gamma) / 2.0;
    cert.via_beta_residual = std::abs(third.value - via_beta);
    cert.via_mixed_residual = std::abs(third.value - via_mixed);
    return cert;
}

}  // namespace trisurf
