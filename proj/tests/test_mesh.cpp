#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "trisurf/constants.hpp"
#include "trisurf/curve.hpp"
#include "trisurf/lattice.hpp"
#include "trisurf/mesh.hpp"
#include "trisurf/symmetry.hpp"

using namespace trisurf;

namespace {

const double kPi = std::acos(-1.0);

// One immersion shared by the read-only checks below; built once.
const ImmersedMesh& shared_mesh() {
    static const ImmersedMesh mesh = build_mesh(1.2, 0, 0.0);
    return mesh;
}

Matrix<double> embedded(const Matrix<SymbolicScalar>& symbolic) {
    const LatticeConstants c = lattice_constants();
    return symbolic.map([&](const SymbolicScalar& s) {
        return s.embed(c.alpha, c.gamma).real();
    });
}

std::array<double, 4> apply4(const Matrix<double>& m,
                             const std::array<double, 4>& x) {
    std::array<double, 4> y{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) y[i] += m(i, j) * x[j];
    return y;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(static_cast<bool>(in));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::size_t count_prefixed(const std::vector<std::string>& lines,
                           const std::string& prefix) {
    std::size_t n = 0;
    for (const auto& l : lines)
        if (l.rfind(prefix, 0) == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("triangulated immersion has the designed size and base point") {
    const ImmersedMesh& mesh = shared_mesh();
    // m = 25 rings, s = 156 sectors: 1 + 25·156 planar vertices, three
    // sheets, 156 + 2·156·24 triangles per sheet.
    const std::size_t n = 3901;
    CHECK(mesh.planar_vertex_count == n);
    CHECK(mesh.vertices.size() == 3 * n);
    CHECK(mesh.triangles.size() == 3 * 7644);
    CHECK(mesh.tree_parent.size() == 3 * n);
    CHECK(mesh.theta == 0.0);
    CHECK(mesh.warnings.empty());

    SUBCASE("sheet and planar labels tile the vertex array") {
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t v : {std::size_t(0), std::size_t(17), n - 1}) {
                const MeshVertex& mv = mesh.vertices[k * n + v];
                CHECK(mv.sheet == static_cast<int>(k));
                CHECK(mv.planar_index == v);
            }
    }

    SUBCASE("every vertex satisfies the curve equation") {
        for (std::size_t i = 0; i < mesh.vertices.size(); i += 997)
            CHECK(on_curve(mesh.vertices[i].source));
    }

    SUBCASE("the base point sits at the origin and roots the tree") {
        // Center vertex on the sheet through w = −1 (canonical index 2).
        const std::size_t base = 2 * n;
        CHECK(mesh.vertices[base].source.z == Complex(0.0, 0.0));
        CHECK(mesh.vertices[base].source.w.real() == doctest::Approx(-1.0));
        CHECK(std::abs(mesh.vertices[base].source.w.imag()) < 1e-15);
        for (int c = 0; c < 4; ++c)
            CHECK(mesh.vertices[base].position[static_cast<std::size_t>(c)] ==
                  0.0);
        CHECK(mesh.tree_parent[base] == base);
        // Exactly one tree root in a connected lift.
        std::size_t roots = 0;
        for (std::size_t i = 0; i < mesh.tree_parent.size(); ++i)
            if (mesh.tree_parent[i] == i) ++roots;
        CHECK(roots == 1);
    }

    SUBCASE("triangles stay within one sheet copy") {
        for (std::size_t t = 0; t < mesh.triangles.size(); t += 501) {
            const auto& tri = mesh.triangles[t];
            const std::size_t sheet = tri[0] / n;
            CHECK(tri[1] / n == sheet);
            CHECK(tri[2] / n == sheet);
        }
    }

    SUBCASE("the real-angle build records the period lattice") {
        REQUIRE(mesh.lattice.has_value());
        const Matrix<double> expected = embedded(lattice_basis());
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK((*mesh.lattice)(i, j) == expected(i, j));
    }
}

TEST_CASE("rebuilding the immersion reproduces it bit for bit") {
    const ImmersedMesh& a = shared_mesh();
    const ImmersedMesh b = build_mesh(1.2, 0, 0.0);
    REQUIRE(a.vertices.size() == b.vertices.size());
    CHECK(a.tree_parent == b.tree_parent);
    for (std::size_t i = 0; i < a.vertices.size(); i += 41) {
        CHECK(a.vertices[i].position == b.vertices[i].position);
        CHECK(a.vertices[i].source.w == b.vertices[i].source.w);
    }
}

TEST_CASE("positions are path independent up to the period lattice") {
    const PathIndependenceReport report =
        verify_path_independence(shared_mesh(), 50);
    CHECK(report.checked == 50);
    CHECK(report.all_consistent());
    CHECK(report.direct_matches + report.lattice_matches == 50);
    // Some resampled edges must close a nontrivial cycle, otherwise the
    // check never exercises the lattice reduction.
    CHECK(report.lattice_matches > 0);
    CHECK(report.worst_residual < 1e-6);
}

TEST_CASE("nearest lattice vector rounding") {
    const Matrix<double> basis = embedded(lattice_basis());

    SUBCASE("recovers integer coefficients through small noise") {
        const std::array<double, 4> coeffs{2.0, -1.0, 3.0, 0.0};
        std::array<double, 4> v{};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) v[i] += basis(i, j) * coeffs[j];
            v[i] += 1e-9;
        }
        const LatticeRounding r = round_to_lattice(basis, v);
        CHECK(r.coefficients == std::array<long long, 4>{2, -1, 3, 0});
        CHECK(r.residual < 1e-8);
        CHECK(r.residual > 0.0);
    }

    SUBCASE("reports a large residual off the lattice") {
        std::array<double, 4> v{};
        for (std::size_t i = 0; i < 4; ++i) v[i] = 0.5 * basis(i, 0);
        const LatticeRounding r = round_to_lattice(basis, v);
        CHECK(r.residual > 0.01);
    }

    SUBCASE("rejects unusable bases") {
        CHECK_THROWS_AS(round_to_lattice(Matrix<double>(3, 3), {}),
                        DimensionMismatch);
        CHECK_THROWS_AS(round_to_lattice(Matrix<double>(4, 4), {}),
                        DomainError);  // all-zero basis is singular
    }
}

TEST_CASE("the order-12 rotation acts on the immersion by its pullback block") {
    const ImmersedMesh& mesh = shared_mesh();
    const std::size_t n = mesh.planar_vertex_count;
    const int s = 156;  // sectors per ring; rotation advances 13 of them
    const Matrix<double> block = rotation_symmetry_pullback().block().map(
        [](const QSqrt3& q) { return q.to_double(); });
    const Matrix<double> lattice = *mesh.lattice;
    const Complex w_factor = std::polar(1.0, 4.0 * kPi / 3.0);

    // Image vertex: rotate the planar index by one twelfth of a turn and
    // carry the sheet along the w-action of the symmetry.
    auto image_of = [&](std::size_t u) {
        const std::size_t planar = u % n;
        const std::size_t sheet = u / n;
        std::size_t planar_rot;
        if (planar == 0) {
            planar_rot = 0;
        } else {
            const std::size_t ring = (planar - 1) / s;
            const std::size_t sector = (planar - 1) % s;
            planar_rot = 1 + ring * s + (sector + 13) % s;
        }
        const Complex w_img = w_factor * mesh.vertices[u].source.w;
        std::size_t best = 0;
        double best_d = 1e300;
        for (std::size_t k = 0; k < 3; ++k) {
            const double d =
                std::abs(mesh.vertices[k * n + planar_rot].source.w - w_img);
            if (d < best_d) {
                best_d = d;
                best = k;
            }
        }
        REQUIRE(best_d < 1e-8);
        REQUIRE(sheet < 3);
        return best * n + planar_rot;
    };

    auto offset_of = [&](std::size_t u) {
        const std::array<double, 4> rotated =
            apply4(block, mesh.vertices[u].position);
        const std::array<double, 4>& img = mesh.vertices[image_of(u)].position;
        std::array<double, 4> d{};
        for (std::size_t c = 0; c < 4; ++c) d[c] = img[c] - rotated[c];
        return d;
    };

    // The symmetry moves every position by one common translation, up to
    // period vectors: offsets at different vertices differ by lattice
    // elements only.
    const std::array<double, 4> reference = offset_of(0);
    for (std::size_t sample = 0; sample < 24; ++sample) {
        const std::size_t u = (sample % 3) * n + 1 +
                              (sample * 5 % 25) * static_cast<std::size_t>(s) +
                              (sample * 29) % s;
        std::array<double, 4> diff = offset_of(u);
        for (std::size_t c = 0; c < 4; ++c) diff[c] -= reference[c];
        const LatticeRounding r = round_to_lattice(lattice, diff);
        CHECK(r.residual < 1e-6);
    }

    SUBCASE("the common translation joins the base point to its image") {
        // The base maps to the center vertex on the sheet through
        // e^{iπ/3}, so the offset measured there is that vertex's position
        // exactly; elsewhere it may differ by a period vector.
        const std::size_t img = image_of(2 * n);
        CHECK(img == n);
        const std::array<double, 4> at_base = offset_of(2 * n);
        for (std::size_t c = 0; c < 4; ++c)
            CHECK(at_base[c] ==
                  doctest::Approx(mesh.vertices[n].position[c]).epsilon(1e-9));
    }
}

TEST_CASE("the induced metric is conformal away from the branch locus") {
    const ConformalityReport report = verify_conformality(shared_mesh());
    CHECK(report.sampled > 20000);
    CHECK(report.pass_fraction() >= 0.95);
    CHECK(report.worst_orthogonality < 1e-3);
    CHECK(report.worst_stretch < 1e-3);

    SUBCASE("an oversized exclusion radius skips every triangle") {
        const ConformalityReport empty =
            verify_conformality(shared_mesh(), 1e-5, 10.0);
        CHECK(empty.sampled == 0);
        CHECK(empty.pass_fraction() == 0.0);
    }

    SUBCASE("invalid parameters are rejected") {
        CHECK_THROWS_AS(verify_conformality(shared_mesh(), 0.0), DomainError);
        CHECK_THROWS_AS(verify_conformality(shared_mesh(), 1e-5, -1.0),
                        DomainError);
    }
}

TEST_CASE("a quarter-turn associate build reduces by the conjugate lattice") {
    const ImmersedMesh mesh = build_mesh(1.2, 0, kPi / 2.0);
    REQUIRE(mesh.lattice.has_value());
    const Matrix<double> expected = embedded(conjugate_lattice_basis());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK((*mesh.lattice)(i, j) == expected(i, j));

    const PathIndependenceReport report = verify_path_independence(mesh, 50);
    CHECK(report.checked == 50);
    CHECK(report.all_consistent());
    CHECK(report.lattice_matches > 0);
}

TEST_CASE("a generic associate angle admits no reduction lattice") {
    const ImmersedMesh mesh = build_mesh(1.2, 0, 0.7);
    CHECK(!mesh.lattice.has_value());
    // Without a lattice the edges that close nontrivial cycles genuinely
    // disagree, and the report says so.
    const PathIndependenceReport report = verify_path_independence(mesh, 50);
    CHECK(report.checked == 50);
    CHECK(report.direct_matches == 45);
    CHECK(report.lattice_matches == 0);
    CHECK(!report.all_consistent());
    CHECK(report.worst_residual > 1e-3);
}

TEST_CASE("build parameters are validated") {
    CHECK_THROWS_AS(build_mesh(0.0, 0, 0.0), DomainError);
    CHECK_THROWS_AS(build_mesh(-1.0, 0, 0.0), DomainError);
    CHECK_THROWS_AS(build_mesh(1.2, -1, 0.0), DomainError);
}

TEST_CASE("vertices landing on branch points are perturbed and reported") {
    // Ring 20 of the radius-1.25 disk lies exactly on the unit circle and
    // meets all twelve branch points.
    const ImmersedMesh mesh = build_mesh(1.25, 0, 0.0);
    CHECK(mesh.warnings.size() == 12);
    for (const std::string& w : mesh.warnings)
        CHECK(w.find("pushed radially outward") != std::string::npos);

    double min_clearance = 1e300;
    for (std::size_t v = 0; v < mesh.planar_vertex_count; ++v) {
        const Complex z = mesh.vertices[v].source.z;
        for (int k = 0; k < 12; ++k)
            min_clearance = std::min(
                min_clearance, std::abs(z - std::polar(1.0, k * kPi / 6.0)));
    }
    CHECK(min_clearance >= 1e-3);

    const PathIndependenceReport report = verify_path_independence(mesh, 50);
    CHECK(report.checked == 50);
    CHECK(report.all_consistent());
}

TEST_CASE("a disk inside the branch circle splits into sheet components") {
    const ImmersedMesh mesh = build_mesh(0.8, 0, 0.0);
    // The two lifts not containing the base point are rooted separately.
    std::size_t roots = 0;
    for (std::size_t i = 0; i < mesh.tree_parent.size(); ++i)
        if (mesh.tree_parent[i] == i) ++roots;
    CHECK(roots == 3);
    CHECK(mesh.warnings.size() == 2);
    for (const std::string& w : mesh.warnings)
        CHECK(w.find("no path from the base point") != std::string::npos);
    // Within each component positions remain consistent.
    const PathIndependenceReport report = verify_path_independence(mesh, 50);
    CHECK(report.checked == 50);
    CHECK(report.all_consistent());
}

TEST_CASE("OBJ export") {
    ImmersedMesh tiny;
    tiny.theta = 0.0;
    tiny.planar_vertex_count = 3;
    for (int i = 0; i < 3; ++i) {
        MeshVertex v;
        v.position = {i == 1 ? 1.0 : 0.0, i == 2 ? 1.0 : 0.0, 0.0,
                      0.25 * (i + 1)};
        tiny.vertices.push_back(v);
    }
    tiny.triangles.push_back({0, 1, 2});

    SUBCASE("writes 1-based vertices and faces plus the fourth coordinate") {
        const std::string path = "/tmp/trisurf_tiny.obj";
        export_obj(tiny, path);
        const auto lines = read_lines(path);
        CHECK(count_prefixed(lines, "v ") == 3);
        CHECK(count_prefixed(lines, "f ") == 1);
        CHECK(lines.back() == "f 1 2 3");
        bool found_first_vertex = false;
        for (const auto& l : lines)
            if (l == "v 0 0 0") found_first_vertex = true;
        CHECK(found_first_vertex);

        const auto side = read_lines(path + ".w4");
        REQUIRE(side.size() == 3);
        CHECK(side[0] == "1 0.25");
        CHECK(side[1] == "2 0.5");
        CHECK(side[2] == "3 0.75");
    }

    SUBCASE("a projection selects coordinates and suppresses the side car") {
        const std::string path = "/tmp/trisurf_tiny_proj.obj";
        std::remove((path + ".w4").c_str());
        export_obj(tiny, path, std::array<int, 3>{0, 1, 3});
        const auto lines = read_lines(path);
        bool found = false;
        for (const auto& l : lines)
            if (l == "v 0 0 0.25") found = true;
        CHECK(found);
        std::ifstream side(path + ".w4");
        CHECK(!side.good());
    }

    SUBCASE("invalid projections are rejected") {
        CHECK_THROWS_AS(
            export_obj(tiny, "/tmp/x.obj", std::array<int, 3>{0, 0, 1}),
            DomainError);
        CHECK_THROWS_AS(
            export_obj(tiny, "/tmp/x.obj", std::array<int, 3>{0, 1, 4}),
            DomainError);
        CHECK_THROWS_AS(
            export_obj(tiny, "/tmp/x.obj", std::array<int, 3>{-1, 1, 2}),
            DomainError);
    }

    SUBCASE("unwritable paths raise IOError") {
        CHECK_THROWS_AS(
            export_obj(tiny, "/nonexistent_dir_xyz/out.obj"), IOError);
    }

    SUBCASE("an empty mesh is a valid zero-face file") {
        const std::string path = "/tmp/trisurf_empty.obj";
        export_obj(ImmersedMesh{}, path);
        const auto lines = read_lines(path);
        CHECK(count_prefixed(lines, "v ") == 0);
        CHECK(count_prefixed(lines, "f ") == 0);
    }

    SUBCASE("the full immersion round-trips its vertex count") {
        const std::string path = "/tmp/trisurf_full.obj";
        export_obj(shared_mesh(), path, std::array<int, 3>{0, 1, 2});
        const auto lines = read_lines(path);
        CHECK(count_prefixed(lines, "v ") == shared_mesh().vertices.size());
        CHECK(count_prefixed(lines, "f ") == shared_mesh().triangles.size());
    }
}
