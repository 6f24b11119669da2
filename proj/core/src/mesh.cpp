#include "trisurf/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "trisurf/constants.hpp"
#include "trisurf/lattice.hpp"
#include "trisurf/quadrature.hpp"

namespace trisurf {

namespace {

const double kPi = std::acos(-1.0);
constexpr double kBranchClearance = 1e-3;

std::array<Complex, 12> branch_points() {
    std::array<Complex, 12> b;
    for (int k = 0; k < 12; ++k) b[k] = std::polar(1.0, k * kPi / 6.0);
    return b;
}

double branch_distance(Complex z) {
    static const std::array<Complex, 12> roots = branch_points();
    double d = std::numeric_limits<double>::infinity();
    for (const Complex& r : roots) d = std::min(d, std::abs(z - r));
    return d;
}

struct PlanarMesh {
    std::vector<Complex> vertices;
    std::vector<std::array<std::size_t, 3>> triangles;
    std::vector<std::array<std::size_t, 2>> edges;  // unique, lo < hi
    std::vector<std::string> warnings;
};

/*
 * Concentric-ring triangulation of the disk. Ring i (1..m) carries s
 * vertices at radius radius·i/m; odd rings are rotated half a sector so
 * the strip triangles alternate. s is divisible by 12, which makes the
 * planar vertex set invariant under rotation by π/6.
 */
PlanarMesh build_planar(double radius, int refinement) {
    const int m = 25 + 12 * refinement;
    const int s = 12 * ((m + 1) / 2);

    PlanarMesh pm;
    pm.vertices.reserve(1 + static_cast<std::size_t>(m) * s);
    pm.vertices.push_back(Complex(0.0, 0.0));
    for (int i = 1; i <= m; ++i) {
        const double r = radius * i / m;
        for (int j = 0; j < s; ++j) {
            const double angle = (2.0 * kPi * j + (i % 2) * kPi) / s;
            Complex z = std::polar(r, angle);
            // Push a vertex radially off any branch point it crowds; the
            // ring gap is two orders of magnitude wider than the clearance,
            // so a few small steps always succeed.
            if (branch_distance(z) < kBranchClearance) {
                const std::size_t index = pm.vertices.size();
                Complex moved = z;
                bool clear = false;
                for (int attempt = 1; attempt <= 5 && !clear; ++attempt) {
                    moved = std::polar(r + attempt * 1.5e-3, angle);
                    clear = branch_distance(moved) >= kBranchClearance;
                }
                if (!clear)
                    throw BranchCollision(
                        "build_mesh: vertex " + std::to_string(index) +
                        " could not be perturbed off the branch locus");
                std::ostringstream msg;
                msg << "vertex " << index << " (ring " << i << ", sector "
                    << j << ") within " << kBranchClearance
                    << " of a branch point; pushed radially outward";
                pm.warnings.push_back(msg.str());
                z = moved;
            }
            pm.vertices.push_back(z);
        }
    }

    auto ring_id = [s](int i, int j) {
        return static_cast<std::size_t>(1 + (i - 1) * s +
                                        ((j % s + s) % s));
    };

    // Center fan.
    for (int j = 0; j < s; ++j)
        pm.triangles.push_back({0, ring_id(1, j), ring_id(1, j + 1)});
    // Annulus strips; the diagonal follows the half-sector offset so every
    // triangle is counterclockwise.
    for (int i = 1; i < m; ++i)
        for (int j = 0; j < s; ++j) {
            const auto in_j = ring_id(i, j), in_j1 = ring_id(i, j + 1);
            const auto out_j = ring_id(i + 1, j),
                       out_j1 = ring_id(i + 1, j + 1);
            if (i % 2 == 0) {
                pm.triangles.push_back({in_j, out_j, in_j1});
                pm.triangles.push_back({in_j1, out_j, out_j1});
            } else {
                pm.triangles.push_back({in_j, out_j, out_j1});
                pm.triangles.push_back({in_j, out_j1, in_j1});
            }
        }

    std::set<std::array<std::size_t, 2>> edge_set;
    for (const auto& t : pm.triangles)
        for (int e = 0; e < 3; ++e) {
            std::size_t a = t[e], b = t[(e + 1) % 3];
            edge_set.insert({std::min(a, b), std::max(a, b)});
        }
    pm.edges.assign(edge_set.begin(), edge_set.end());
    return pm;
}

struct SegmentIntegral {
    std::array<Complex, 4> value{};
    Complex w_end;
};

// ∫ Ψ dz along the straight segment z1 → z2, continuing the sheet from w1.
SegmentIntegral integrate_segment(Complex z1, Complex w1, Complex z2,
                                  const QuadratureSpec& spec) {
    const Complex dz = z2 - z1;
    auto path = [z1, dz](double t) { return z1 + t * dz; };
    const ContinuedSheet sheet = continue_sheet(path, 0.0, 1.0, w1);

    SegmentIntegral out;
    for (std::size_t c = 0; c < 4; ++c) {
        auto f = [&](double t) {
            const SurfacePoint p{path(t), sheet(t)};
            return psi(p).components[c] * dz;
        };
        out.value[c] = integrate_path(f, 0.0, 1.0, spec).value;
    }
    out.w_end = sheet(1.0);
    return out;
}

// Index of the canonical sheet value nearest to w; the separation between
// sheets away from the branch locus dwarfs continuation error.
int nearest_sheet(const std::array<Complex, 3>& values, Complex w) {
    int best = 0;
    double best_d = std::abs(values[0] - w);
    for (int k = 1; k < 3; ++k) {
        const double d = std::abs(values[k] - w);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

Matrix<double> embed_lattice(const Matrix<SymbolicScalar>& symbolic) {
    const LatticeConstants c = lattice_constants();
    return symbolic.map([&](const SymbolicScalar& s) {
        return s.embed(c.alpha, c.gamma).real();
    });
}

// The angle admits a torus reduction when e^{iθ} is real or imaginary:
// the real period lattice at θ ≡ 0 (mod π), the conjugate one at θ ≡ π/2.
std::optional<Matrix<double>> reduction_lattice(double theta) {
    const double mod_pi = std::remainder(theta, kPi);
    if (std::abs(mod_pi) < 1e-12) return embed_lattice(lattice_basis());
    if (std::abs(std::abs(mod_pi) - kPi / 2.0) < 1e-12)
        return embed_lattice(conjugate_lattice_basis());
    return std::nullopt;
}

}  // namespace

LatticeRounding round_to_lattice(const Matrix<double>& basis,
                                 const std::array<double, 4>& v) {
    if (basis.rows() != 4 || basis.cols() != 4)
        throw DimensionMismatch("round_to_lattice: basis must be 4x4");

    // Gaussian elimination with partial pivoting on [basis | v].
    double a[4][5];
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a[i][j] = basis(i, j);
        a[i][4] = v[i];
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-12)
            throw DomainError("round_to_lattice: basis is singular");
        std::swap(a[col], a[pivot]);
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int j = col; j <= 4; ++j) a[r][j] -= f * a[col][j];
        }
    }

    LatticeRounding out;
    std::array<double, 4> rounded{};
    for (int i = 0; i < 4; ++i) {
        const double x = a[i][4] / a[i][i];
        rounded[i] = std::round(x);
        out.coefficients[i] = static_cast<long long>(rounded[i]);
    }
    for (int i = 0; i < 4; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 4; ++j) acc += basis(i, j) * rounded[j];
        out.residual = std::max(out.residual, std::abs(acc - v[i]));
    }
    return out;
}

ImmersedMesh build_mesh(double radius, int refinement, double theta) {
    if (!(radius > 0.0))
        throw DomainError("build_mesh: radius must be positive");
    if (refinement < 0)
        throw DomainError("build_mesh: refinement must be nonnegative");

    PlanarMesh pm = build_planar(radius, refinement);
    const std::size_t n = pm.vertices.size();

    std::vector<std::vector<std::size_t>> adjacency(n);
    for (const auto& e : pm.edges) {
        adjacency[e[0]].push_back(e[1]);
        adjacency[e[1]].push_back(e[0]);
    }

    std::vector<std::array<Complex, 3>> sheets(n);
    for (std::size_t v = 0; v < n; ++v) sheets[v] = sheet_values(pm.vertices[v]);

    ImmersedMesh mesh;
    mesh.theta = theta;
    mesh.planar_vertex_count = n;
    mesh.warnings = std::move(pm.warnings);
    mesh.lattice = reduction_lattice(theta);
    mesh.vertices.resize(3 * n);
    mesh.tree_parent.assign(3 * n, 0);
    for (int k = 0; k < 3; ++k)
        for (std::size_t v = 0; v < n; ++v) {
            MeshVertex& mv = mesh.vertices[k * n + v];
            mv.source = {pm.vertices[v], sheets[v][k]};
            mv.planar_index = v;
            mv.sheet = k;
        }

    // Complex tree integrals from the base point; positions take the real
    // part after the associate rotation.
    std::vector<std::array<Complex, 4>> integral(3 * n);
    std::vector<char> visited(3 * n, 0);
    const QuadratureSpec spec{};

    // Base point (0, −1): the center vertex on the sheet through w = −1.
    const std::size_t base =
        static_cast<std::size_t>(nearest_sheet(sheets[0], Complex(-1.0, 0.0))) *
            n;
    std::deque<std::size_t> frontier;

    auto seed_component = [&](std::size_t root) {
        visited[root] = 1;
        mesh.tree_parent[root] = root;
        integral[root] = {};
        frontier.push_back(root);
    };
    seed_component(base);

    std::size_t reached = 1;
    while (reached < 3 * n) {
        while (!frontier.empty()) {
            const std::size_t u = frontier.front();
            frontier.pop_front();
            const std::size_t uv = u % n;
            const int uk = static_cast<int>(u / n);
            for (const std::size_t nb : adjacency[uv]) {
                if (visited[nb] && visited[n + nb] && visited[2 * n + nb])
                    continue;
                const SegmentIntegral seg = integrate_segment(
                    pm.vertices[uv], sheets[uv][static_cast<std::size_t>(uk)],
                    pm.vertices[nb], spec);
                const std::size_t target =
                    static_cast<std::size_t>(nearest_sheet(sheets[nb],
                                                           seg.w_end)) *
                        n +
                    nb;
                if (visited[target]) continue;
                visited[target] = 1;
                mesh.tree_parent[target] = u;
                for (int c = 0; c < 4; ++c)
                    integral[target][c] = integral[u][c] + seg.value[c];
                frontier.push_back(target);
                ++reached;
            }
        }
        if (reached < 3 * n) {
            // The disk does not cross the branch circle, so some sheet
            // component is unreachable from the base point. Root it at the
            // origin; positions within it stay exact relative to each
            // other.
            std::size_t root = 0;
            while (visited[root]) ++root;
            seed_component(root);
            ++reached;
            std::ostringstream msg;
            msg << "sheet component rooted at vertex " << root
                << "; it has no path from the base point inside this disk";
            mesh.warnings.push_back(msg.str());
        }
    }

    const Complex rotation = std::polar(1.0, theta);
    for (std::size_t i = 0; i < 3 * n; ++i)
        for (int c = 0; c < 4; ++c)
            mesh.vertices[i].position[static_cast<std::size_t>(c)] =
                (rotation * integral[i][c]).real();

    mesh.triangles.reserve(3 * pm.triangles.size());
    for (std::size_t k = 0; k < 3; ++k)
        for (const auto& t : pm.triangles)
            mesh.triangles.push_back(
                {k * n + t[0], k * n + t[1], k * n + t[2]});
    return mesh;
}

void export_obj(const ImmersedMesh& mesh, const std::string& path,
                const std::optional<std::array<int, 3>>& projection) {
    std::array<int, 3> axes = projection.value_or(std::array<int, 3>{0, 1, 2});
    for (const int a : axes)
        if (a < 0 || a > 3)
            throw DomainError("export_obj: projection axes must be in 0..3");
    if (axes[0] == axes[1] || axes[0] == axes[2] || axes[1] == axes[2])
        throw DomainError("export_obj: projection axes must be distinct");

    std::ofstream out(path);
    if (!out) throw IOError("export_obj: cannot open " + path);
    out << std::setprecision(17);
    out << "# triangulated immersion, theta = " << mesh.theta << "\n";
    for (const MeshVertex& v : mesh.vertices)
        out << "v " << v.position[static_cast<std::size_t>(axes[0])] << ' '
            << v.position[static_cast<std::size_t>(axes[1])] << ' '
            << v.position[static_cast<std::size_t>(axes[2])] << "\n";
    for (const auto& t : mesh.triangles)
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << "\n";
    if (!out.good()) throw IOError("export_obj: write failed for " + path);
    out.close();

    if (!projection) {
        const std::string side = path + ".w4";
        std::ofstream attr(side);
        if (!attr) throw IOError("export_obj: cannot open " + side);
        attr << std::setprecision(17);
        for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
            attr << i + 1 << ' ' << mesh.vertices[i].position[3] << "\n";
        if (!attr.good()) throw IOError("export_obj: write failed for " + side);
    }
}

PathIndependenceReport verify_path_independence(const ImmersedMesh& mesh,
                                                std::size_t sample_count) {
    PathIndependenceReport report;
    const std::size_t n = mesh.planar_vertex_count;
    if (n == 0 || mesh.vertices.size() != 3 * n || sample_count == 0)
        return report;

    // Planar edges, recovered from the sheet-0 face copies.
    std::set<std::array<std::size_t, 2>> edge_set;
    for (const auto& t : mesh.triangles) {
        if (t[0] >= n || t[1] >= n || t[2] >= n) continue;
        for (int e = 0; e < 3; ++e) {
            std::size_t a = t[e], b = t[(e + 1) % 3];
            edge_set.insert({std::min(a, b), std::max(a, b)});
        }
    }
    const std::vector<std::array<std::size_t, 2>> edges(edge_set.begin(),
                                                        edge_set.end());
    if (edges.empty()) return report;

    const Complex rotation = std::polar(1.0, mesh.theta);
    const QuadratureSpec spec{};
    const std::size_t pool = 3 * edges.size();
    const std::size_t stride = std::max<std::size_t>(
        1, pool / (2 * sample_count));

    for (std::size_t idx = 0; idx < pool && report.checked < sample_count;
         idx += stride) {
        const std::size_t sheet = idx / edges.size();
        const auto& e = edges[idx % edges.size()];
        const std::size_t u = sheet * n + e[0];
        const SurfacePoint& pu = mesh.vertices[u].source;

        const SegmentIntegral seg = integrate_segment(
            pu.z, pu.w, mesh.vertices[e[1]].source.z, spec);
        std::array<Complex, 3> targets;
        for (int k = 0; k < 3; ++k)
            targets[static_cast<std::size_t>(k)] =
                mesh.vertices[static_cast<std::size_t>(k) * n + e[1]].source.w;
        const std::size_t v =
            static_cast<std::size_t>(nearest_sheet(targets, seg.w_end)) * n +
            e[1];
        // Skip the edges the integration tree itself used.
        if (mesh.tree_parent[v] == u || mesh.tree_parent[u] == v) continue;

        std::array<double, 4> diff{};
        double norm = 0.0;
        for (int c = 0; c < 4; ++c) {
            const std::size_t ci = static_cast<std::size_t>(c);
            diff[ci] = mesh.vertices[v].position[ci] -
                       mesh.vertices[u].position[ci] -
                       (rotation * seg.value[ci]).real();
            norm = std::max(norm, std::abs(diff[ci]));
        }

        ++report.checked;
        if (norm < 1e-8) {
            ++report.direct_matches;
            report.worst_residual = std::max(report.worst_residual, norm);
        } else if (mesh.lattice) {
            const LatticeRounding r = round_to_lattice(*mesh.lattice, diff);
            if (r.residual < 1e-6) {
                ++report.lattice_matches;
                report.worst_residual =
                    std::max(report.worst_residual, r.residual);
            } else {
                report.worst_residual =
                    std::max(report.worst_residual, std::min(norm, r.residual));
            }
        } else {
            report.worst_residual = std::max(report.worst_residual, norm);
        }
    }
    return report;
}

ConformalityReport verify_conformality(const ImmersedMesh& mesh, double step,
                                       double exclusion_radius) {
    if (!(step > 0.0) || !(exclusion_radius > 0.0))
        throw DomainError(
            "verify_conformality: step and exclusion radius must be positive");

    ConformalityReport report;
    const Complex rotation = std::polar(1.0, mesh.theta);
    const QuadratureSpec spec{};

    for (const auto& t : mesh.triangles) {
        const SurfacePoint& a = mesh.vertices[t[0]].source;
        const Complex zc = (a.z + mesh.vertices[t[1]].source.z +
                            mesh.vertices[t[2]].source.z) /
                           3.0;
        // Only triangles comfortably away from the branch locus are rated:
        // the centroid and, to keep the continuation segment clear, the
        // corners as well.
        bool clear = branch_distance(zc) >= exclusion_radius;
        for (int corner = 0; corner < 3 && clear; ++corner)
            clear = branch_distance(
                        mesh.vertices[t[static_cast<std::size_t>(corner)]]
                            .source.z) >= exclusion_radius;
        if (!clear) continue;
        ++report.sampled;

        const Complex wc =
            integrate_segment(a.z, a.w, zc, spec).w_end;

        // Central differences of the immersion across the centroid.
        std::array<double, 4> fu{}, fv{};
        for (int dir = 0; dir < 2; ++dir) {
            const Complex h = dir == 0 ? Complex(step, 0.0)
                                       : Complex(0.0, step);
            const SegmentIntegral plus = integrate_segment(zc, wc, zc + h, spec);
            const SegmentIntegral minus =
                integrate_segment(zc, wc, zc - h, spec);
            for (int c = 0; c < 4; ++c) {
                const std::size_t ci = static_cast<std::size_t>(c);
                const double d =
                    (rotation * (plus.value[ci] - minus.value[ci])).real() /
                    (2.0 * step);
                (dir == 0 ? fu : fv)[ci] = d;
            }
        }

        double dot = 0.0, nu2 = 0.0, nv2 = 0.0;
        for (int c = 0; c < 4; ++c) {
            const std::size_t ci = static_cast<std::size_t>(c);
            dot += fu[ci] * fv[ci];
            nu2 += fu[ci] * fu[ci];
            nv2 += fv[ci] * fv[ci];
        }
        const double nu = std::sqrt(nu2), nv = std::sqrt(nv2);
        const double orthogonality = std::abs(dot) / std::max(nu * nv, 1e-300);
        const double stretch = std::abs(nu - nv) / std::max(nu, 1e-300);
        report.worst_orthogonality =
            std::max(report.worst_orthogonality, orthogonality);
        report.worst_stretch = std::max(report.worst_stretch, stretch);
        if (orthogonality < 1e-3 && stretch < 1e-3) ++report.passed;
    }
    return report;
}

}  // namespace trisurf
