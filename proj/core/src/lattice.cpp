#include "trisurf/lattice.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "trisurf/constants.hpp"
#include "trisurf/periods.hpp"

namespace trisurf {

namespace {

// Shorthand builders: a(r, s) = (r + s√3)·α, g(r, s) = (r + s√3)·γ, both
// real; the symbolic tables below are assembled from these.
SymbolicScalar a(Rational r, Rational s = Rational(0)) {
    return SymbolicScalar::alpha(GaussSqrt3(QSqrt3(std::move(r), std::move(s))));
}
SymbolicScalar g(Rational r, Rational s = Rational(0)) {
    return SymbolicScalar::gamma(GaussSqrt3(QSqrt3(std::move(r), std::move(s))));
}
SymbolicScalar zero() { return SymbolicScalar(); }

const Rational kHalf = Rational(1, 2);
const Rational kThreeHalves = Rational(3, 2);

}  // namespace

Matrix<SymbolicScalar> omega_8() {
    const GaussSqrt3 c1 = scalar_c1();
    const GaussSqrt3 c2 = scalar_c2();
    const GaussSqrt3 c3 = c2 - c1;
    Matrix<SymbolicScalar> m(4, 4);
    m(0, 0) = SymbolicScalar::alpha(Rational(-2) * c3);
    m(0, 1) = SymbolicScalar::alpha(Rational(2) * c1);
    m(0, 2) = SymbolicScalar::alpha(c2);
    m(0, 3) = SymbolicScalar::alpha(-c1);
    m(1, 2) = SymbolicScalar::alpha(-c2);
    m(1, 3) = SymbolicScalar::alpha(c1);
    return m;
}

Matrix<SymbolicScalar> omega_9() {
    const GaussSqrt3 c1 = scalar_c1();
    const GaussSqrt3 c2 = scalar_c2();
    const GaussSqrt3 i = GaussSqrt3::i();
    const GaussSqrt3 root3i = GaussSqrt3(QSqrt3(), QSqrt3::sqrt3());  // √3·i
    Matrix<SymbolicScalar> m(4, 4);
    m(2, 0) = SymbolicScalar::gamma(Rational(-2) * (root3i * c2));
    m(2, 2) = SymbolicScalar::gamma(root3i * c1);
    m(2, 3) = SymbolicScalar::gamma(root3i * c2);
    m(3, 1) = SymbolicScalar::gamma(Rational(2) * (i * c1));
    m(3, 2) = SymbolicScalar::gamma(i * c1);
    m(3, 3) = SymbolicScalar::gamma(-(i * c2));
    return m;
}

Matrix<SymbolicScalar> omega_reduced() {
    const Matrix<SymbolicScalar> m8 = omega_8();
    const Matrix<SymbolicScalar> m9 = omega_9();
    Matrix<SymbolicScalar> m(4, 8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            m(i, j) = m8(i, j);
            m(i, j + 4) = m9(i, j);
        }
    return m;
}

Matrix<SymbolicScalar> omega_real_table() {
    return Matrix<SymbolicScalar>{
        {a(3), a(3), zero(), a(-kThreeHalves), zero(), zero(), zero(), zero()},
        {zero(), zero(), zero(), a(kThreeHalves), zero(), zero(), zero(),
         zero()},
        {zero(), zero(), zero(), zero(), g(6), zero(), g(-kThreeHalves),
         g(-3)},
        {zero(), zero(), zero(), zero(), zero(), g(0, -1), g(0, -kHalf),
         g(0, 1)}};
}

Matrix<SymbolicScalar> omega_imag_table() {
    return Matrix<SymbolicScalar>{
        {a(0, -1), a(0, 1), a(0, 1), a(0, -kHalf), zero(), zero(), zero(),
         zero()},
        {zero(), zero(), a(0, -1), a(0, kHalf), zero(), zero(), zero(), zero()},
        {zero(), zero(), zero(), zero(), zero(), zero(), g(0, kThreeHalves),
         zero()},
        {zero(), zero(), zero(), zero(), zero(), g(3), g(kThreeHalves),
         zero()}};
}

Matrix<SymbolicScalar> lattice_basis() {
    return Matrix<SymbolicScalar>{
        {a(3), a(kThreeHalves), zero(), zero()},
        {zero(), a(kThreeHalves), zero(), zero()},
        {zero(), zero(), g(3), g(kThreeHalves)},
        {zero(), zero(), zero(), g(0, kHalf)}};
}

Matrix<SymbolicScalar> conjugate_lattice_basis() {
    return Matrix<SymbolicScalar>{
        {a(0, 1), a(0, kHalf), zero(), zero()},
        {zero(), a(0, kHalf), zero(), zero()},
        {zero(), zero(), g(0, 3), g(0, kThreeHalves)},
        {zero(), zero(), zero(), g(kThreeHalves)}};
}

std::string default_lattice_data_path() {
#ifdef TRISURF_SOURCE_DATA_FILE
    if (std::filesystem::exists(TRISURF_SOURCE_DATA_FILE))
        return TRISURF_SOURCE_DATA_FILE;
#endif
#ifdef TRISURF_INSTALL_DATA_FILE
    if (std::filesystem::exists(TRISURF_INSTALL_DATA_FILE))
        return TRISURF_INSTALL_DATA_FILE;
#endif
    throw IOError("lattice data file not found in build or install locations");
}

namespace {

std::map<std::string, Matrix<long long>> parse_matrix_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open lattice data file: " + path);

    // Tokenize, dropping '#' comments.
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }

    std::size_t pos = 0;
    const auto next = [&]() -> const std::string& {
        if (pos >= tokens.size())
            throw IOError("lattice data file: unexpected end of input");
        return tokens[pos++];
    };
    const auto next_int = [&]() -> long long {
        const std::string& t = next();
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &used);
        } catch (const std::exception&) {
            throw IOError("lattice data file: expected integer, got '" + t +
                          "'");
        }
        if (used != t.size())
            throw IOError("lattice data file: expected integer, got '" + t +
                          "'");
        return v;
    };

    if (next() != "format" || next_int() != 1)
        throw IOError("lattice data file: unsupported format header");

    std::map<std::string, Matrix<long long>> out;
    while (pos < tokens.size()) {
        if (next() != "matrix")
            throw IOError("lattice data file: expected 'matrix' section");
        const std::string name = next();
        const long long r = next_int();
        const long long c = next_int();
        if (r <= 0 || c <= 0 || r > 64 || c > 64)
            throw IOError("lattice data file: implausible matrix shape");
        Matrix<long long> m(static_cast<std::size_t>(r),
                            static_cast<std::size_t>(c));
        for (long long i = 0; i < r; ++i)
            for (long long j = 0; j < c; ++j)
                m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    next_int();
        if (!out.emplace(name, std::move(m)).second)
            throw IOError("lattice data file: duplicate matrix " + name);
    }
    return out;
}

// Fetch a named matrix in acting orientation: accept it as stored or
// transposed, by shape.
Matrix<long long> fetch(const std::map<std::string, Matrix<long long>>& all,
                        const std::string& name, std::size_t r,
                        std::size_t c) {
    const auto it = all.find(name);
    if (it == all.end())
        throw IOError("lattice data file: missing matrix " + name);
    if (it->second.rows() == r && it->second.cols() == c) return it->second;
    if (it->second.rows() == c && it->second.cols() == r)
        return it->second.transpose();
    throw IOError("lattice data file: matrix " + name + " has wrong shape");
}

}  // namespace

LatticeData load_lattice_data(const std::string& path) {
    const auto all = parse_matrix_file(path);
    LatticeData d{fetch(all, "G_OMEGA_1", 20, 8), fetch(all, "G_OMEGA_2", 8, 20),
                  fetch(all, "G_R_1", 8, 4),      fetch(all, "G_R_2", 4, 8),
                  fetch(all, "G_I_1", 8, 4),      fetch(all, "G_I_2", 4, 8)};
    // Orientation lock: the wide pair must reproduce the period matrix.
    // (Shape alone fixes the orientation of every non-square matrix here;
    // this check pins the content as well, once, at load time.)
    if (!(omega_reduced().multiply(d.g_omega_2) == period_matrix_symbolic()))
        throw IOError(
            "lattice data file: reduction identity fails in both "
            "orientations of G_OMEGA_2");
    return d;
}

LatticeData load_lattice_data() {
    return load_lattice_data(default_lattice_data_path());
}

bool verify_two_sided_reduction(const Matrix<SymbolicScalar>& U,
                                const Matrix<SymbolicScalar>& V,
                                const Matrix<long long>& G1,
                                const Matrix<long long>& G2) {
    if (U.rows() != V.rows() || G1.rows() != U.cols() ||
        G1.cols() != V.cols() || G2.rows() != V.cols() ||
        G2.cols() != U.cols())
        throw DimensionMismatch(
            "verify_two_sided_reduction: shapes do not conform");
    return U.multiply(G1) == V && V.multiply(G2) == U;
}

bool verify_omega_reduction(const LatticeData& data) {
    const Matrix<SymbolicScalar> omega = period_matrix_symbolic();
    const Matrix<SymbolicScalar> reduced = omega_reduced();
    if (!verify_two_sided_reduction(omega, reduced, data.g_omega_1,
                                    data.g_omega_2))
        return false;
    const auto re = reduced.map([](const SymbolicScalar& s) {
        return real_part(s);
    });
    const auto im = reduced.map([](const SymbolicScalar& s) {
        return imag_part(s);
    });
    return re == omega_real_table() && im == omega_imag_table();
}

bool conjugate_lattice_check(const LatticeData& data) {
    const Matrix<SymbolicScalar> lam = conjugate_lattice_basis();
    if (!verify_two_sided_reduction(omega_imag_table(), lam, data.g_i_1,
                                    data.g_i_2))
        return false;
    // Nondegeneracy: upper triangular with nonzero diagonal, exactly.
    for (std::size_t i = 0; i < 4; ++i) {
        if (lam(i, i).is_zero()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!lam(i, j).is_zero()) return false;
    }
    return true;
}

double conjugate_lattice_determinant() {
    const LatticeConstants lc = lattice_constants();
    const auto lam = conjugate_lattice_basis();
    double m[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m[i][j] = lam(i, j).embed(lc.alpha, lc.gamma).real();
    const auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    return m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
           m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
}

LatticeIdentitySet verify_all_lattice_identities(const LatticeData& data) {
    LatticeIdentitySet r;
    const Matrix<SymbolicScalar> omega = period_matrix_symbolic();
    const Matrix<SymbolicScalar> reduced = omega_reduced();
    const Matrix<SymbolicScalar> om_r = omega_real_table();
    const Matrix<SymbolicScalar> om_i = omega_imag_table();
    const Matrix<SymbolicScalar> lam = lattice_basis();
    const Matrix<SymbolicScalar> lam_conj = conjugate_lattice_basis();

    r.omega_forward = omega.multiply(data.g_omega_1) == reduced;
    r.omega_backward = reduced.multiply(data.g_omega_2) == omega;
    r.split_real =
        reduced.map([](const SymbolicScalar& s) { return real_part(s); }) ==
        om_r;
    r.split_imag =
        reduced.map([](const SymbolicScalar& s) { return imag_part(s); }) ==
        om_i;
    r.real_forward = om_r.multiply(data.g_r_1) == lam;
    r.real_backward = lam.multiply(data.g_r_2) == om_r;
    r.imag_forward = om_i.multiply(data.g_i_1) == lam_conj;
    r.imag_backward = lam_conj.multiply(data.g_i_2) == om_i;
    return r;
}

namespace {

// One mutated-column check for the identity U·G = V: with G(r,c) replaced
// by G(r,c)+delta, does column c of the product still equal column c of V?
bool column_still_matches(const Matrix<SymbolicScalar>& U,
                          const Matrix<SymbolicScalar>& V,
                          const Matrix<long long>& G, std::size_t r,
                          std::size_t c, long long delta) {
    for (std::size_t i = 0; i < U.rows(); ++i) {
        SymbolicScalar acc;
        for (std::size_t k = 0; k < U.cols(); ++k) {
            const long long coef = G(k, c) + (k == r ? delta : 0);
            if (coef != 0) acc += U(i, k) * coef;
        }
        if (acc != V(i, c)) return false;
    }
    return true;
}

}  // namespace

MutationSweepResult mutation_sweep(const LatticeData& data) {
    const Matrix<SymbolicScalar> omega = period_matrix_symbolic();
    const Matrix<SymbolicScalar> reduced = omega_reduced();
    const Matrix<SymbolicScalar> om_r = omega_real_table();
    const Matrix<SymbolicScalar> om_i = omega_imag_table();
    const Matrix<SymbolicScalar> lam = lattice_basis();
    const Matrix<SymbolicScalar> lam_conj = conjugate_lattice_basis();

    struct Case {
        const char* name;
        const Matrix<long long>* G;
        const Matrix<SymbolicScalar>* U;
        const Matrix<SymbolicScalar>* V;
    };
    // A perturbation of G can only move the identity its matrix acts in:
    // the other five identities do not mention it.  Only the affected
    // product column needs recomputation.
    const Case cases[] = {
        {"G_OMEGA_1", &data.g_omega_1, &omega, &reduced},
        {"G_OMEGA_2", &data.g_omega_2, &reduced, &omega},
        {"G_R_1", &data.g_r_1, &om_r, &lam},
        {"G_R_2", &data.g_r_2, &lam, &om_r},
        {"G_I_1", &data.g_i_1, &om_i, &lam_conj},
        {"G_I_2", &data.g_i_2, &lam_conj, &om_i},
    };

    MutationSweepResult out;
    for (const auto& cs : cases) {
        for (std::size_t r = 0; r < cs.G->rows(); ++r)
            for (std::size_t c = 0; c < cs.G->cols(); ++c) {
                ++out.total;
                const bool plus_caught =
                    !column_still_matches(*cs.U, *cs.V, *cs.G, r, c, +1);
                const bool minus_caught =
                    !column_still_matches(*cs.U, *cs.V, *cs.G, r, c, -1);
                if (plus_caught && minus_caught) {
                    ++out.detected;
                } else {
                    std::ostringstream label;
                    label << cs.name << "(" << (r + 1) << "," << (c + 1) << ")";
                    out.undetected.push_back(label.str());
                }
            }
    }
    return out;
}

// Fraction-free (Bareiss) rank of an integral matrix held in rationals.
int rational_matrix_rank(Matrix<Rational> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Rational prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(piv, j), m(rank, j));
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m(r, j) =
                    (m(rank, col) * m(r, j) - m(r, col) * m(rank, j)) / prev;
            m(r, col) = Rational(0);
        }
        prev = m(rank, col);
        ++rank;
    }
    return static_cast<int>(rank);
}

namespace {

// The four rational coordinates (over {α, √3α, γ, √3γ}) of a real table
// entry, with a purity check: index `keep` may be nonzero, all others must
// vanish, as must the imaginary part.
Rational pure_coord(const SymbolicScalar& s, int keep) {
    const auto re = s.real_coords();
    const auto im = s.imag_coords();
    for (int k = 0; k < 4; ++k) {
        if (im[k] != 0)
            throw Error("associate_rank: table entry has an imaginary part");
        if (k != keep && re[k] != 0)
            throw Error("associate_rank: table entry mixes basis generators");
    }
    return re[keep];
}

}  // namespace

int associate_rank(long long m, long long n) {
    if (n == 0)
        throw DegenerateAngle(
            "associate_rank: n = 0 puts cos θ at zero, where the scaled "
            "real part is undefined");
    const long long g = std::gcd(m < 0 ? -m : m, n < 0 ? -n : n);
    m /= g;
    n /= g;

    const Matrix<SymbolicScalar> om_r = omega_real_table();
    const Matrix<SymbolicScalar> om_i = omega_imag_table();

    /*
     * Scale the matrix Ω_R − tan θ · Ω_I by 6n (rank-invariant):
     * with tan θ = m/(√3 n), rows 1–2 combine the α part of Ω_R with the
     * √3α part of Ω_I, row 3 the γ part with the √3γ part, and row 4 the
     * √3γ part with the γ part — all with integer coefficients:
     *
     *   rows 1–2:  6n·a − 6m·b   (a = α-coord of Ω_R, b = √3α-coord of Ω_I)
     *   row 3:     6n·c − 6m·d   (c = γ-coord of Ω_R,  d = √3γ-coord of Ω_I)
     *   row 4:     6n·d′ − 2m·c′ (d′ = √3γ-coord of Ω_R, c′ = γ-coord of Ω_I)
     */
    Matrix<Rational> q(4, 8);
    for (std::size_t i = 0; i < 4; ++i) {
        const int keep_r = (i < 2) ? 0 : (i == 2 ? 2 : 3);
        const int keep_i = (i < 2) ? 1 : (i == 2 ? 3 : 2);
        const Rational scale_i = (i == 3) ? Rational(2 * m) : Rational(6 * m);
        for (std::size_t j = 0; j < 8; ++j) {
            const Rational r_part = pure_coord(om_r(i, j), keep_r);
            const Rational i_part = pure_coord(om_i(i, j), keep_i);
            q(i, j) = Rational(6 * n) * r_part - scale_i * i_part;
        }
    }
    return rational_matrix_rank(std::move(q));
}

int associate_rank_sweep(long long bound) {
    int min_rank = 4;
    for (long long n = 1; n <= bound; ++n)
        for (long long m = -bound; m <= bound; ++m) {
            if (std::gcd(m < 0 ? -m : m, n) != 1) continue;
            min_rank = std::min(min_rank, associate_rank(m, n));
        }
    return min_rank;
}

}  // namespace trisurf
