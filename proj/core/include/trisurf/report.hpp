#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace trisurf {

/*
 * Aggregated verification: every closed-form, identity, and consistency
 * check of the toolkit runs behind one entry point and lands in a single
 * machine-readable report suitable for diffable CI artifacts.
 */

struct RunConfig {
    // Quadrature tolerance override for the numeric items; 0 keeps each
    // item's default. Values outside (0,1) are rejected with ConfigError.
    double tol = 0.0;
    // Glob over item names (e.g. "lattice.*"); empty selects everything.
    // A pattern matching nothing still yields the constants snapshot.
    std::string only;
    // Record per-item wall-clock times; off by default so reports stay
    // byte-for-byte reproducible.
    bool timings = false;
    // Worker threads for item execution; 1 guarantees a bitwise
    // deterministic serial run. Must be ≥ 1.
    int jobs = 1;
    // Integer-matrix data file; empty uses the default search path.
    std::string data_file;
    // Test hook: corrupt one entry of the real reduction matrix after
    // loading, to demonstrate that exactly the two real-lattice items
    // catch it.
    bool mutate_real_reduction = false;
};

struct ReportItem {
    std::string name;    // stable dotted identifier, filterable with --only
    std::string anchor;  // the verified statement, in formula shorthand
    bool pass = false;
    // Exact-arithmetic checks carry no numeric residual: they serialize it
    // as "exact-zero" (pass) or "exact-nonzero" (fail). Numeric checks
    // store the achieved residual; an item aborted by an exception leaves
    // it unset and serializes null.
    bool exact = false;
    std::optional<double> residual;
    double tolerance = 0.0;  // pass threshold; 0 for exact checks
    std::optional<double> runtime_ms;
    std::string detail;  // one-line context, or the recorded error
};

struct VerificationReport {
    std::string toolkit_version;
    // Constants snapshot, full double precision.
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    std::vector<ReportItem> items;

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_pass() const { return failed() == 0; }
};

std::string toolkit_version();

// Shell-style glob match for item selection; an empty pattern matches all.
bool matches_only(const std::string& pattern, const std::string& name);

/*
 * Runs the full verification ladder in a fixed order — constants, period
 * closed forms, the β/γ relation, period-matrix transport, the lattice
 * reduction identities, associate-family rank, wedge-integral vanishing,
 * symmetry pullbacks and group structure, the conformality certificates,
 * and the genus obstruction table (at least 18 items). Individual
 * failures, including thrown errors, are recorded in their item; the run
 * itself never aborts on them. Throws ConfigError for an invalid config.
 */
VerificationReport run_all(const RunConfig& config = {});

// Stable-order JSON form; serialize_report is its dump with a trailing
// newline, byte-for-byte deterministic for a fixed config and version
// (timings off).
nlohmann::ordered_json report_json(const VerificationReport& report);
std::string serialize_report(const VerificationReport& report);

// Writes serialize_report to a file. Throws IOError when it cannot.
void write_report(const VerificationReport& report, const std::string& path);

}  // namespace trisurf
