#include "trisurf/report.hpp"

#include <fnmatch.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "trisurf/constants.hpp"
#include "trisurf/curve.hpp"
#include "trisurf/cycles.hpp"
#include "trisurf/errors.hpp"
#include "trisurf/homology.hpp"
#include "trisurf/lattice.hpp"
#include "trisurf/periods.hpp"
#include "trisurf/symmetry.hpp"

#ifndef TRISURF_VERSION
#define TRISURF_VERSION "0.0.0"
#endif

namespace trisurf {

namespace {

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

QuadratureSpec quad_for(const RunConfig& config) {
    QuadratureSpec spec{};
    if (config.tol != 0.0) {
        spec.abs_tol = config.tol;
        spec.rel_tol = config.tol;
    }
    return spec;
}

LatticeData data_for(const RunConfig& config) {
    LatticeData data = config.data_file.empty()
                           ? load_lattice_data()
                           : load_lattice_data(config.data_file);
    // Corrupting one detectable entry of the real reduction matrix must be
    // caught by the forward identity and the two-sided certificate, and by
    // nothing else.
    if (config.mutate_real_reduction) data.g_r_1(0, 0) += 1;
    return data;
}

void exact_verdict(ReportItem& item, bool ok, const std::string& detail) {
    item.exact = true;
    item.pass = ok;
    item.detail = detail;
}

void numeric_verdict(ReportItem& item, double residual,
                     const std::string& detail) {
    item.residual = residual;
    item.pass = residual < item.tolerance;
    item.detail = detail;
}

Matrix<QSqrt3> qsqrt3_identity() {
    Matrix<QSqrt3> m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = QSqrt3(1);
    return m;
}

struct ItemSpec {
    std::string name;
    std::string anchor;
    double tolerance = 0.0;
    std::function<void(ReportItem&, const RunConfig&)> run;
};

std::vector<ItemSpec> item_table() {
    std::vector<ItemSpec> table;

    table.push_back(
        {"constants.alpha-two-routes",
         "closed-form:alpha=Beta(2/3,1/6)/(6*cbrt2)", 1e-10,
         [](ReportItem& item, const RunConfig& config) {
             const double denom = 6.0 * std::cbrt(2.0);
             const double closed =
                 beta_function(2.0 / 3.0, 1.0 / 6.0) / denom;
             const double quad = beta_function_quadrature(
                                     2.0 / 3.0, 1.0 / 6.0, quad_for(config)) /
                                 denom;
             numeric_verdict(
                 item, std::abs(closed - quad) / closed,
                 "log-Gamma route " + sci(closed) +
                     " against direct quadrature of the Beta integral");
         }});

    table.push_back(
        {"constants.beta-two-routes",
         "closed-form:beta=Beta(1/3,1/6)/(4*sqrt3)", 1e-10,
         [](ReportItem& item, const RunConfig& config) {
             const double denom = 4.0 * std::sqrt(3.0);
             const double closed =
                 beta_function(1.0 / 3.0, 1.0 / 6.0) / denom;
             const double quad = beta_function_quadrature(
                                     1.0 / 3.0, 1.0 / 6.0, quad_for(config)) /
                                 denom;
             numeric_verdict(
                 item, std::abs(closed - quad) / closed,
                 "log-Gamma route " + sci(closed) +
                     " against direct quadrature of the Beta integral");
         }});

    const auto period_item = [](ReportItem& item, const RunConfig& config,
                                const CyclePath& cycle,
                                const std::array<SymbolicScalar, 4>& closed) {
        const QuadratureSpec spec = quad_for(config);
        const LatticeConstants c = lattice_constants(spec);
        const std::array<PeriodValue, 4> numeric =
            period_vector_numeric(cycle, spec);
        double worst = 0.0, quad_error = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            worst = std::max(worst,
                             std::abs(numeric[k].value -
                                      closed[k].embed(c.alpha, c.gamma)));
            quad_error = std::max(quad_error, numeric[k].error);
        }
        numeric_verdict(item, worst,
                        "largest deviation over the four components; "
                        "quadrature error estimate " +
                            sci(quad_error));
    };
    table.push_back(
        {"periods.a1-closed-form",
         "closed-form:A1=(1+exp(i*pi/3))*(alpha,-alpha,sqrt3*i*gamma,-i*gamma)",
         1e-8,
         [period_item](ReportItem& item, const RunConfig& config) {
             period_item(item, config, cycle_A1(), a1_period_symbolic());
         }});
    table.push_back(
        {"periods.a2-closed-form",
         "closed-form:A2=i*sqrt3*(alpha,-alpha,sqrt3*i*gamma,-i*gamma)", 1e-8,
         [period_item](ReportItem& item, const RunConfig& config) {
             period_item(item, config, cycle_A2(), a2_period_symbolic());
         }});

    table.push_back(
        {"periods.beta-gamma-relation", "identity:beta=sqrt3*gamma", 1e-10,
         [](ReportItem& item, const RunConfig& config) {
             const BetaGammaCertificate cert =
                 verify_beta_gamma_relation(quad_for(config));
             item.residual = cert.relation_residual;
             item.pass = cert.relation_residual < item.tolerance &&
                         cert.via_beta_residual < 1e-8 &&
                         cert.via_mixed_residual < 1e-8;
             item.detail = "integral route residuals " +
                           sci(cert.via_beta_residual) + " (via beta) and " +
                           sci(cert.via_mixed_residual) + " (via the mix)";
         }});

    table.push_back(
        {"periods.matrix-transport",
         "identity:period-columns=rotation-transport-of-A1-A2", 1e-8,
         [](ReportItem& item, const RunConfig& config) {
             const PeriodMatrix pm = assemble_period_matrix(
                 quad_for(config), item.tolerance, config.jobs);
             numeric_verdict(item, pm.max_residual,
                             "80 entries cross-checked; worst quadrature "
                             "error estimate " +
                                 sci(pm.max_quad_error));
         }});

    table.push_back(
        {"lattice.omega-forward-reduction",
         "identity:Omega*G_O1=(Omega8|Omega9)", 0.0,
         [](ReportItem& item, const RunConfig& config) {
             const LatticeIdentitySet set =
                 verify_all_lattice_identities(data_for(config));
             exact_verdict(item, set.omega_forward,
                           "exact product over the symbolic period ring");
         }});
    table.push_back(
        {"lattice.omega-two-sided-certificate",
         "certificate:Omega<->(Omega8|Omega9)", 0.0,
         [](ReportItem& item, const RunConfig& config) {
             const LatticeData data = data_for(config);
             exact_verdict(
                 item,
                 verify_two_sided_reduction(period_matrix_symbolic(),
                                            omega_reduced(), data.g_omega_1,
                                            data.g_omega_2),
                 "both reduction directions hold exactly");
         }});
    table.push_back(
        {"lattice.split-consistency",
         "identity:(Omega8|Omega9)=OmegaR+i*OmegaI", 0.0,
         [](ReportItem& item, const RunConfig& config) {
             const LatticeIdentitySet set =
                 verify_all_lattice_identities(data_for(config));
             exact_verdict(item, set.split_real && set.split_imag,
                           "real and imaginary tables match the reduced "
                           "matrix entrywise");
         }});
    table.push_back(
        {"lattice.real-forward-reduction", "identity:OmegaR*G_R1=Lambda", 0.0,
         [](ReportItem& item, const RunConfig& config) {
             const LatticeIdentitySet set =
                 verify_all_lattice_identities(data_for(config));
             exact_verdict(item, set.real_forward,
                           "exact product over the symbolic period ring");
         }});
    table.push_back(
        {"lattice.real-two-sided-certificate", "certificate:OmegaR<->Lambda",
         0.0,
         [](ReportItem& item, const RunConfig& config) {
             const LatticeData data = data_for(config);
             exact_verdict(item,
                           verify_two_sided_reduction(
                               omega_real_table(), lattice_basis(),
                               data.g_r_1, data.g_r_2),
                           "both reduction directions hold exactly");
         }});
    table.push_back(
        {"lattice.imag-forward-reduction",
         "identity:OmegaI*G_I1=Lambda_pi2", 0.0,
         [](ReportItem& item, const RunConfig& config) {
             const LatticeIdentitySet set =
                 verify_all_lattice_identities(data_for(config));
             exact_verdict(item, set.imag_forward,
                           "exact product over the symbolic period ring");
         }});
    table.push_back(
        {"lattice.imag-two-sided-certificate",
         "certificate:OmegaI<->Lambda_pi2", 0.0,
         [](ReportItem& item, const RunConfig& config) {
             const LatticeData data = data_for(config);
             exact_verdict(item,
                           verify_two_sided_reduction(
                               omega_imag_table(), conjugate_lattice_basis(),
                               data.g_i_1, data.g_i_2),
                           "both reduction directions hold exactly");
         }});

    table.push_back(
        {"lattice.associate-rank", "rank:Re(exp(i*theta)*Omega)=4", 0.0,
         [](ReportItem& item, const RunConfig&) {
             const int rank = associate_rank_sweep(20);
             exact_verdict(item, rank == 4,
                           "minimum exact rank " + std::to_string(rank) +
                               " over reduced tangent pairs with |m|,|n| "
                               "<= 20");
         }});

    table.push_back(
        {"homology.wedge-vanishing",
         "integral:all-six-wedge-products-vanish", 1e-4,
         [](ReportItem& item, const RunConfig& config) {
             HomologyOptions opts;
             if (config.tol != 0.0) {
                 opts.quad.abs_tol = config.tol;
                 opts.quad.rel_tol = config.tol;
             }
             const auto results = verify_homological_triviality(opts);
             double worst = 0.0, quad_error = 0.0;
             for (const PairingResult& r : results) {
                 worst = std::max(worst, std::abs(r.integral) / r.scale);
                 quad_error = std::max(quad_error, r.quad_error);
             }
             numeric_verdict(item, worst,
                             "worst |integral| relative to the "
                             "absolute-value normalizer; quadrature error "
                             "estimate " +
                                 sci(quad_error));
         }});
    table.push_back(
        {"homology.excision-stability",
         "integral:wedge-excision-halving-stable", 1e-6,
         [](ReportItem& item, const RunConfig& config) {
             HomologyOptions opts;
             if (config.tol != 0.0) {
                 opts.quad.abs_tol = config.tol;
                 opts.quad.rel_tol = config.tol;
             }
             HomologyOptions half = opts;
             half.excision_radius = opts.excision_radius / 2.0;
             const auto full = verify_homological_triviality(opts);
             const auto halved = verify_homological_triviality(half);
             double move = 0.0;
             for (std::size_t k = 0; k < 6; ++k)
                 move = std::max(move, std::abs(full[k].integral -
                                                halved[k].integral));
             numeric_verdict(item, move,
                             "largest change of any pairing when the "
                             "excision radius is halved");
         }});

    table.push_back(
        {"symmetry.pullback-residuals",
         "pullback:exact-isometry-action-of-the-symmetries", 1e-12,
         [](ReportItem& item, const RunConfig&) {
             double worst = verify_pullback(rotation_automorphism(),
                                            rotation_pullback(), 100);
             worst = std::max(
                 worst, verify_pullback(rotation_symmetry(),
                                        rotation_symmetry_pullback(), 100));
             worst = std::max(
                 worst, verify_pullback(inversion_symmetry(),
                                        inversion_symmetry_pullback(), 100));
             numeric_verdict(item, worst,
                             "rotation, rotation symmetry, and inversion, "
                             "each sampled at 100 points");
         }});

    table.push_back(
        {"symmetry.group-order", "group:order-24-with-dihedral-relations",
         0.0,
         [](ReportItem& item, const RunConfig&) {
             const Matrix<QSqrt3> b1 = rotation_symmetry_pullback().block();
             const Matrix<QSqrt3> b2 = inversion_symmetry_pullback().block();
             const GeneratedGroup group = generated_group({b1, b2});

             Matrix<QSqrt3> p = qsqrt3_identity();
             bool order_twelve = true;
             for (int k = 1; k <= 12; ++k) {
                 p = p.multiply(b1);
                 if (k < 12 && p == qsqrt3_identity()) order_twelve = false;
             }
             const bool dihedral =
                 order_twelve && p == qsqrt3_identity() &&
                 b2.multiply(b2) == qsqrt3_identity() &&
                 b2.multiply(b1).multiply(b2) == b1.transpose();
             exact_verdict(item, group.order == 24 && dihedral,
                           "closure order " + std::to_string(group.order) +
                               "; generator relations checked exactly");
         }});
    table.push_back(
        {"symmetry.plane-splitting", "group:preserves-12|34-splitting", 0.0,
         [](ReportItem& item, const RunConfig&) {
             const GeneratedGroup group =
                 generated_group({rotation_symmetry_pullback().block(),
                                  inversion_symmetry_pullback().block()});
             bool ok = group.order > 0;
             for (const auto& m : group.elements)
                 ok = ok && preserves_plane_splitting(m);
             exact_verdict(item, ok,
                           "every element fixes or swaps the coordinate "
                           "2-planes");
         }});

    table.push_back(
        {"curve.conformal-identity", "identity:sum-of-squared-numerators=0",
         0.0,
         [](ReportItem& item, const RunConfig&) {
             exact_verdict(item, conformal_identity_exact(),
                           "integer-polynomial expansion cancels termwise");
         }});
    table.push_back(
        {"curve.no-common-zeros", "certificate:numerators-share-no-zero",
         0.0,
         [](ReportItem& item, const RunConfig&) {
             exact_verdict(item, check_no_common_zeros(),
                           "exact gcd plus branch-point evaluation");
         }});

    table.push_back(
        {"curve.obstruction-table",
         "table:genus-admissible-iff-g=3r+1,r>=1", 0.0,
         [](ReportItem& item, const RunConfig&) {
             bool ok = true;
             for (int g = 0; g <= 301; ++g) {
                 const Obstruction o = trigonal_obstruction(g);
                 const bool expect = g >= 4 && g % 3 == 1;
                 if (o.admissible != expect) ok = false;
                 if (expect && o.r != (g - 1) / 3) ok = false;
                 if (!expect && o.reason.empty()) ok = false;
             }
             exact_verdict(item, ok,
                           "all genera up to 301 against the congruence "
                           "classification");
         }});

    return table;
}

}  // namespace

std::size_t VerificationReport::passed() const {
    std::size_t n = 0;
    for (const ReportItem& item : items)
        if (item.pass) ++n;
    return n;
}

std::size_t VerificationReport::failed() const {
    return items.size() - passed();
}

std::string toolkit_version() { return TRISURF_VERSION; }

bool matches_only(const std::string& pattern, const std::string& name) {
    if (pattern.empty()) return true;
    return fnmatch(pattern.c_str(), name.c_str(), 0) == 0;
}

VerificationReport run_all(const RunConfig& config) {
    if (config.tol != 0.0 && !(config.tol > 0.0 && config.tol < 1.0))
        throw ConfigError("run_all: tol must lie in (0,1)");
    if (config.jobs < 1) throw ConfigError("run_all: jobs must be >= 1");

    VerificationReport report;
    report.toolkit_version = toolkit_version();
    const LatticeConstants constants = lattice_constants();
    report.alpha = constants.alpha;
    report.beta = constants.beta;
    report.gamma = constants.gamma;

    std::vector<ItemSpec> selected;
    for (ItemSpec& spec : item_table())
        if (matches_only(config.only, spec.name))
            selected.push_back(std::move(spec));
    report.items.resize(selected.size());

    const auto run_one = [&](std::size_t i) {
        ReportItem item;
        item.name = selected[i].name;
        item.anchor = selected[i].anchor;
        item.tolerance = selected[i].tolerance;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            selected[i].run(item, config);
        } catch (const std::exception& e) {
            item.pass = false;
            item.exact = false;
            item.residual.reset();
            item.detail = std::string("recorded error: ") + e.what();
        }
        if (config.timings) {
            const auto t1 = std::chrono::steady_clock::now();
            item.runtime_ms =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        report.items[i] = std::move(item);
    };

    const std::size_t worker_count = std::min<std::size_t>(
        static_cast<std::size_t>(config.jobs), selected.size());
    if (worker_count <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
    } else {
        // Items run concurrently; assembly stays ordered because each task
        // writes only its own slot.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (std::size_t w = 0; w < worker_count; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < selected.size();
                     i = next.fetch_add(1))
                    run_one(i);
            });
        for (std::thread& t : workers) t.join();
    }
    return report;
}

nlohmann::ordered_json report_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["toolkit_version"] = report.toolkit_version;
    j["constants"]["alpha"] = report.alpha;
    j["constants"]["beta"] = report.beta;
    j["constants"]["gamma"] = report.gamma;
    j["summary"]["items"] = report.items.size();
    j["summary"]["passed"] = report.passed();
    j["summary"]["failed"] = report.failed();
    j["items"] = nlohmann::ordered_json::array();
    for (const ReportItem& item : report.items) {
        nlohmann::ordered_json o;
        o["name"] = item.name;
        o["anchor"] = item.anchor;
        o["status"] = item.pass ? "pass" : "fail";
        if (item.exact)
            o["residual"] = item.pass ? "exact-zero" : "exact-nonzero";
        else if (item.residual)
            o["residual"] = *item.residual;
        else
            o["residual"] = nullptr;
        o["tolerance"] = item.tolerance;
        if (item.runtime_ms)
            o["runtime_ms"] = *item.runtime_ms;
        else
            o["runtime_ms"] = nullptr;
        o["detail"] = item.detail;
        j["items"].push_back(std::move(o));
    }
    return j;
}

std::string serialize_report(const VerificationReport& report) {
    return report_json(report).dump(2) + "\n";
}

void write_report(const VerificationReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IOError("write_report: cannot open " + path);
    out << serialize_report(report);
    if (!out.good()) throw IOError("write_report: write failed for " + path);
}

}  // namespace trisurf
