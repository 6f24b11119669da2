#include <array>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "trisurf/curve.hpp"
#include "trisurf/errors.hpp"
#include "trisurf/mesh.hpp"
#include "trisurf/report.hpp"

namespace {

int run_verify(const trisurf::RunConfig& config, const std::string& out) {
    const trisurf::VerificationReport report = trisurf::run_all(config);
    if (out.empty()) {
        std::cout << trisurf::serialize_report(report);
    } else {
        trisurf::write_report(report, out);
        std::cerr << "report written to " << out << "\n";
    }
    std::cerr << "verify: " << report.passed() << "/" << report.items.size()
              << " items passed\n";
    return report.all_pass() ? 0 : 1;
}

std::optional<std::array<int, 3>> parse_projection(const std::string& text) {
    if (text.size() != 3) return std::nullopt;
    std::array<int, 3> axes{};
    for (int i = 0; i < 3; ++i) {
        if (text[i] < '0' || text[i] > '3') return std::nullopt;
        axes[i] = text[i] - '0';
    }
    if (axes[0] == axes[1] || axes[0] == axes[2] || axes[1] == axes[2])
        return std::nullopt;
    return axes;
}

int run_mesh(double theta, double radius, int refine,
             const std::string& project, const std::string& out) {
    std::optional<std::array<int, 3>> projection;
    if (!project.empty()) {
        projection = parse_projection(project);
        if (!projection) {
            std::cerr << "error: --project needs three distinct digits from "
                         "0-3 (e.g. 012), got '"
                      << project << "'\n";
            return 2;
        }
    }
    const trisurf::ImmersedMesh mesh =
        trisurf::build_mesh(radius, refine, theta);
    for (const std::string& warning : mesh.warnings)
        std::cerr << "warning: " << warning << "\n";
    trisurf::export_obj(mesh, out, projection);
    std::cout << "mesh: " << mesh.vertices.size() << " vertices, "
              << mesh.triangles.size() << " triangles, theta = " << theta
              << " -> " << out << "\n";
    if (!projection)
        std::cout << "fourth coordinate written to " << out << ".w4\n";
    return 0;
}

int run_obstruction(int genus) {
    const trisurf::Obstruction verdict = trisurf::trigonal_obstruction(genus);
    if (verdict.admissible)
        std::cout << "genus " << genus << ": admissible, family index r = "
                  << verdict.r << "\n";
    else
        std::cout << "genus " << genus << ": obstructed: " << verdict.reason
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "trisurf: verification and meshing toolkit for a trigonal minimal "
        "surface family in a flat 4-torus"};
    app.set_version_flag("--version", trisurf::toolkit_version());
    app.set_config("--config", "",
                   "Read flag defaults from an INI/TOML file (sections per "
                   "subcommand); command-line flags override it");
    app.require_subcommand(1);

    trisurf::RunConfig config;
    std::string report_out;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run the verification ladder and emit a JSON report");
    verify->add_option(
        "--tol", config.tol,
        "Quadrature tolerance override for numeric items, in (0,1); 0 keeps "
        "per-item defaults")
        ->capture_default_str();
    verify->add_option("--out", report_out,
                       "Write the JSON report to this file instead of stdout");
    verify->add_option(
        "--only", config.only,
        "Run only items whose name matches this shell glob, e.g. 'lattice.*'");
    verify->add_option("--jobs", config.jobs,
                       "Worker threads for item execution; 1 runs serially "
                       "and is bitwise deterministic")
        ->capture_default_str();
    verify->add_flag("--timings", config.timings,
                     "Record per-item wall-clock times (makes the report "
                     "non-reproducible byte-for-byte)");
    verify->add_option("--data-file", config.data_file,
                       "Integer reduction-matrix data file; empty uses the "
                       "default search path");

    double theta = 0.0, radius = 1.2;
    int refine = 0;
    std::string project, mesh_out = "trisurf-mesh.obj";
    CLI::App* mesh = app.add_subcommand(
        "mesh",
        "Triangulate the immersion (or an associate surface) and export OBJ");
    mesh->add_option("--theta", theta, "Associate-family angle in radians")
        ->capture_default_str();
    mesh->add_option("--radius", radius,
                     "Planar disk radius; above 1 all three sheets connect "
                     "through the branch circle")
        ->capture_default_str();
    mesh->add_option("--refine", refine,
                     "Refinement level; the disk gets 25 + 12*refine rings")
        ->capture_default_str();
    mesh->add_option("--project", project,
                     "Write only these three of the four coordinates, as "
                     "three distinct digits from 0-3 (e.g. 012)");
    mesh->add_option("--out", mesh_out,
                     "Output OBJ path; without --project the fourth "
                     "coordinate lands in a side-car at <out>.w4")
        ->capture_default_str();

    int genus = 0;
    CLI::App* obstruction = app.add_subcommand(
        "obstruction",
        "Report whether a genus admits this trigonal minimal-surface family");
    obstruction->add_option("--genus", genus, "Genus to test")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, usage errors 2
    }

    try {
        if (verify->parsed()) return run_verify(config, report_out);
        if (mesh->parsed())
            return run_mesh(theta, radius, refine, project, mesh_out);
        return run_obstruction(genus);
    } catch (const trisurf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
