#include "trisurf/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace trisurf {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kTwoPi = 2.0 * std::acos(-1.0);

Matrix<QSqrt3> identity4() {
    Matrix<QSqrt3> m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = QSqrt3(1);
    return m;
}

// diag(R(π/2), R(−π/3)) with R(t) the counterclockwise rotation by t.
Matrix<QSqrt3> rotation_block() {
    const Rational half(1, 2);
    Matrix<QSqrt3> b(4, 4);
    b(0, 1) = -QSqrt3(1);
    b(1, 0) = QSqrt3(1);
    b(2, 2) = QSqrt3(half);
    b(2, 3) = QSqrt3(Rational(0), half);   // √3/2
    b(3, 2) = -QSqrt3(Rational(0), half);  // −√3/2
    b(3, 3) = QSqrt3(half);
    return b;
}

Complex pow12(Complex z) {
    const Complex z3 = z * z * z;
    const Complex z6 = z3 * z3;
    return z6 * z6;
}

bool finite(Complex v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Small relative distance of z¹² from 1 marks the branch locus, where the
// 1/w² factor of the differentials has a pole.
bool near_branch_locus(Complex z, double tol) {
    const double scale = std::max(1.0, std::pow(std::abs(z), 12.0));
    return std::abs(pow12(z) - 1.0) < tol * scale;
}

// Entries flattened to a totally ordered key: (rational part, √3 part) per
// entry, row-major. Exact, so distinct matrices never collide.
std::vector<Rational> matrix_key(const Matrix<QSqrt3>& m) {
    std::vector<Rational> key;
    key.reserve(m.rows() * m.cols() * 2);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            key.push_back(m(i, j).a);
            key.push_back(m(i, j).b);
        }
    return key;
}

}  // namespace

Automorphism deck_transformation() {
    const Complex u(-0.5, 0.5 * kSqrt3);  // e^{2πi/3}
    return {"deck",
            [u](const SurfacePoint& p) -> SurfacePoint {
                return {p.z, u * p.w};
            },
            [](const SurfacePoint&) -> Complex { return Complex(1.0, 0.0); }};
}

Automorphism rotation_automorphism() {
    const Complex u(0.5 * kSqrt3, 0.5);  // e^{iπ/6}
    return {"rotation",
            [u](const SurfacePoint& p) -> SurfacePoint {
                return {u * p.z, p.w};
            },
            [u](const SurfacePoint&) -> Complex { return u; }};
}

Automorphism rotation_symmetry() {
    const Complex u(0.5 * kSqrt3, 0.5);    // e^{iπ/6}
    const Complex d(-0.5, -0.5 * kSqrt3);  // e^{4πi/3}
    return {"rotation-symmetry",
            [u, d](const SurfacePoint& p) -> SurfacePoint {
                return {u * p.z, d * p.w};
            },
            [u](const SurfacePoint&) -> Complex { return u; }};
}

Automorphism inversion_symmetry() {
    return {"inversion-symmetry",
            [](const SurfacePoint& p) -> SurfacePoint {
                const Complex z2 = p.z * p.z;
                return {1.0 / p.z, -p.w / (z2 * z2)};
            },
            [](const SurfacePoint& p) -> Complex {
                return -1.0 / (p.z * p.z);
            }};
}

PullbackMatrix::PullbackMatrix(GaussSqrt3 scalar, Matrix<QSqrt3> block)
    : scalar_(std::move(scalar)), block_(std::move(block)) {
    if (block_.rows() != 4 || block_.cols() != 4)
        throw DomainError("PullbackMatrix: block must be 4x4");
    if (!(scalar_ * scalar_.conj() == GaussSqrt3(1)))
        throw DomainError("PullbackMatrix: scalar is not a complex unit");
    if (!(block_.transpose().multiply(block_) == identity4()))
        throw DomainError("PullbackMatrix: block is not orthogonal");
}

PullbackMatrix rotation_pullback() {
    return {GaussSqrt3::unit_2pi_3(), rotation_block()};
}

PullbackMatrix rotation_symmetry_pullback() {
    return {GaussSqrt3(1), rotation_block()};
}

PullbackMatrix inversion_symmetry_pullback() {
    Matrix<QSqrt3> b(4, 4);
    b(0, 0) = QSqrt3(1);
    b(1, 1) = QSqrt3(-1);
    b(2, 2) = QSqrt3(-1);
    b(3, 3) = QSqrt3(1);
    return {GaussSqrt3(1), b};
}

double pullback_residual_at(const Automorphism& a,
                            const PullbackMatrix& expected,
                            const SurfacePoint& p) {
    if (!on_curve(p, 1e-9))
        throw DomainError(
            "pullback_residual_at: point violates the curve equation");
    if (near_branch_locus(p.z, 1e-9))
        throw SampleOnSingularLocus(
            "pullback_residual_at: sample lies on the branch locus");

    const SurfacePoint ip = a.action(p);
    const Complex zi = ip.z;
    const Complex wi = ip.w;
    const Complex di = a.dz(p);
    if (!finite(zi) || !finite(wi) || !finite(di))
        throw SampleOnSingularLocus("pullback_residual_at: '" + a.name +
                                    "' is singular at the sample");
    if (near_branch_locus(zi, 1e-9))
        throw SampleOnSingularLocus(
            "pullback_residual_at: image lies on the branch locus");
    if (!on_curve({zi, wi}, 1e-8))
        throw DomainError("pullback_residual_at: '" + a.name +
                          "' maps the sample off the curve");

    const PsiValue at_p = psi(p);
    const PsiValue at_image = psi({zi, wi});
    const Complex s = expected.scalar().to_complex();

    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        Complex rhs(0.0, 0.0);
        for (std::size_t j = 0; j < 4; ++j)
            rhs += expected.block()(k, j).to_double() * at_p.components[j];
        rhs *= s;
        const Complex lhs = at_image.components[k] * di;
        num = std::max(num, std::abs(lhs - rhs));
        den = std::max(den, std::abs(rhs));
    }
    return num / std::max(den, 1e-300);
}

double verify_pullback(const Automorphism& a, const PullbackMatrix& expected,
                       std::size_t sample_count) {
    std::mt19937 gen(7321u);
    std::uniform_real_distribution<double> radius(0.3, 2.2);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);

    double worst = 0.0;
    for (std::size_t i = 0; i < sample_count; ++i) {
        Complex z;
        int tries = 0;
        do {
            if (++tries > 256)
                throw SampleOnSingularLocus(
                    "verify_pullback: sampler failed to leave the branch "
                    "locus");
            z = std::polar(radius(gen), angle(gen));
        } while (near_branch_locus(z, 1e-2));
        const SurfacePoint p{z, sheet_values(z)[i % 3]};
        worst = std::max(worst, pullback_residual_at(a, expected, p));
    }
    return worst;
}

bool is_block_diagonal(const Matrix<QSqrt3>& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw DimensionMismatch("is_block_diagonal: matrix must be 4x4");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool same_plane = (i < 2) == (j < 2);
            if (!same_plane && !m(i, j).is_zero()) return false;
        }
    return true;
}

bool preserves_plane_splitting(const Matrix<QSqrt3>& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw DimensionMismatch("preserves_plane_splitting: matrix must be 4x4");
    bool diagonal = true, anti_diagonal = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool same_plane = (i < 2) == (j < 2);
            if (!m(i, j).is_zero()) {
                if (same_plane)
                    anti_diagonal = false;
                else
                    diagonal = false;
            }
        }
    return diagonal || anti_diagonal;
}

GeneratedGroup generated_group(const std::vector<Matrix<QSqrt3>>& generators,
                               std::size_t max_order) {
    const Matrix<QSqrt3> id = identity4();

    GeneratedGroup out;
    for (const auto& g : generators) {
        if (g.rows() != 4 || g.cols() != 4)
            throw DimensionMismatch("generated_group: generators must be 4x4");
        if (!(g.transpose().multiply(g) == id))
            throw DomainError("generated_group: generator is not orthogonal");
        out.generator_preserves_splitting.push_back(
            preserves_plane_splitting(g));
    }

    // Breadth-first closure under right multiplication by generators. The
    // map keeps elements deduplicated by exact entry comparison; node
    // addresses are stable, so the frontier can hold pointers.
    std::map<std::vector<Rational>, Matrix<QSqrt3>> elements;
    std::deque<const Matrix<QSqrt3>*> frontier;
    auto seed = elements.emplace(matrix_key(id), id).first;
    frontier.push_back(&seed->second);

    while (!frontier.empty()) {
        const Matrix<QSqrt3>* m = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            Matrix<QSqrt3> prod = m->multiply(g);
            std::vector<Rational> key = matrix_key(prod);
            auto [it, inserted] =
                elements.emplace(std::move(key), std::move(prod));
            if (!inserted) continue;
            if (elements.size() > max_order)
                throw NonClosure(
                    "generated_group: element count exceeded bound " +
                    std::to_string(max_order));
            frontier.push_back(&it->second);
        }
    }

    out.order = elements.size();
    out.elements.reserve(out.order);
    for (const auto& [key, m] : elements) out.elements.push_back(m);
    return out;
}

}  // namespace trisurf
