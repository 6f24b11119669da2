#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trisurf/curve.hpp"
#include "trisurf/matrix.hpp"

namespace trisurf {

/*
 * Triangulated immersions.
 *
 * The immersion sends a curve point p to Re(e^{iθ}·∫_{p₀}^{p} Ψ) ∈ R⁴,
 * with base point p₀ = (0, −1) and θ the associate-family angle. The mesh
 * triangulates the disk |z| ≤ radius with concentric rings, lifts the
 * triangulation to the three sheets of the curve, and integrates Ψ along a
 * breadth-first spanning tree of the lifted edge graph, continuing the
 * sheet across every edge. Positions are unreduced (the periodic surface is
 * left unwrapped); the lattice that would reduce them to the torus is
 * attached as metadata when the angle admits one.
 */

struct MeshVertex {
    std::array<double, 4> position{};  // Re(e^{iθ}·∫ Ψ) along the tree
    SurfacePoint source;               // lifted curve point (z, w)
    std::size_t planar_index = 0;      // index into the planar triangulation
    int sheet = 0;                     // canonical sheet label at z (0..2)
};

struct ImmersedMesh {
    std::vector<MeshVertex> vertices;
    // Oriented triples of vertex indices; each planar triangle appears once
    // per sheet.
    std::vector<std::array<std::size_t, 3>> triangles;
    // The recorded integration tree: tree_parent[i] is the vertex whose
    // position vertex i was integrated from; the root is its own parent.
    std::vector<std::size_t> tree_parent;
    double theta = 0.0;
    std::size_t planar_vertex_count = 0;
    // Columns generate the period lattice that reduces positions to the
    // torus: Λ at θ ≡ 0 (mod π), the conjugate lattice at θ ≡ π/2, absent
    // otherwise.
    std::optional<Matrix<double>> lattice;
    // One entry per recovered build problem (e.g. a vertex perturbed off a
    // branch point).
    std::vector<std::string> warnings;
};

/*
 * Triangulates and immerses. The planar disk uses rings at radii
 * radius·i/m, i = 1..m with m = 25 + 12·refinement, and a fixed sector
 * count divisible by 12, so the order-12 rotation maps planar vertices to
 * planar vertices. Requested vertices closer than 1e−3 to a branch point
 * are pushed radially outward and a warning is recorded; BranchCollision is
 * thrown only if perturbation cannot achieve clearance. Throws DomainError
 * for radius ≤ 0 or refinement < 0.
 *
 * Sheets connect through edges crossing the branch circle, so a radius
 * above 1 yields one connected lift. With a smaller disk the other two
 * sheet components carry no path from the base point; each is then rooted
 * at the origin with a warning, leaving positions within the component
 * exact up to a common translation.
 */
ImmersedMesh build_mesh(double radius, int refinement, double theta);

/*
 * Writes the mesh as ASCII OBJ ("v"/"f" records, 1-based face indices).
 * With a projection, the three chosen coordinates (each in 0..3, distinct)
 * become the OBJ position. Without one, coordinates 0..2 are written and a
 * side-car file at path + ".w4" receives one "index value" line per vertex
 * (1-based index, 4th coordinate). Throws DomainError for an invalid
 * projection and IOError when a file cannot be written.
 */
void export_obj(const ImmersedMesh& mesh, const std::string& path,
                const std::optional<std::array<int, 3>>& projection =
                    std::nullopt);

/*
 * Re-integrates a deterministic spread of edges that the spanning tree did
 * not use and compares against the stored endpoint positions. Each edge
 * must either match directly (difference below 1e−8) or, when the mesh
 * carries a lattice, match up to a lattice vector found by rounding the
 * coordinates of the difference in the lattice basis (residual below 1e−6).
 */
struct PathIndependenceReport {
    std::size_t checked = 0;
    std::size_t direct_matches = 0;
    std::size_t lattice_matches = 0;
    double worst_residual = 0.0;  // worst remaining mismatch over all edges
    bool all_consistent() const {
        return direct_matches + lattice_matches == checked;
    }
};
PathIndependenceReport verify_path_independence(const ImmersedMesh& mesh,
                                                std::size_t sample_count = 50);

// Nearest lattice vector: coefficients n minimizing basis·n ≈ v by rounding
// the exact solve, and the sup-norm residual ‖basis·n − v‖∞. The basis must
// be an invertible 4×4 matrix whose columns are the generators.
struct LatticeRounding {
    std::array<long long, 4> coefficients{};
    double residual = 0.0;
};
LatticeRounding round_to_lattice(const Matrix<double>& basis,
                                 const std::array<double, 4>& v);

/*
 * Conformality of the induced metric, checked at triangle centroids whose
 * base point stays at least exclusion_radius away from every branch point:
 * the finite-difference tangents fᵤ, fᵥ (central differences with the
 * given step) must satisfy |⟨fᵤ,fᵥ⟩| < 1e−3·|fᵤ||fᵥ| and
 * ||fᵤ|−|fᵥ|| < 1e−3·|fᵤ|.
 */
struct ConformalityReport {
    std::size_t sampled = 0;  // triangles far enough from the branch locus
    std::size_t passed = 0;
    double worst_orthogonality = 0.0;  // max |⟨fᵤ,fᵥ⟩| / (|fᵤ||fᵥ|)
    double worst_stretch = 0.0;        // max ||fᵤ|−|fᵥ|| / |fᵤ|
    double pass_fraction() const {
        return sampled == 0 ? 0.0
                            : static_cast<double>(passed) /
                                  static_cast<double>(sampled);
    }
};
ConformalityReport verify_conformality(const ImmersedMesh& mesh,
                                       double step = 1e-5,
                                       double exclusion_radius = 0.05);

}  // namespace trisurf
