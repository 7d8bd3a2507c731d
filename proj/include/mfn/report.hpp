#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Machine-readable verification reports: one record per checked identity,
// JSON documents per suite, CSV convergence tables. Reports are reproducible
// given (config, seed, version) once timing fields are stripped.

namespace mfn {

inline constexpr const char* kReportSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

struct SuiteConfig {
    int radial_order = 32;
    int angular_order = 24;
    double radial_scale = 1.0;
    std::uint64_t seed = 7;
    int n_min = 0;
    int n_max = 2;
    double tol_scale = 1.0;
    int sc_axis_order = 16;   // per-axis order of the conformal route quadratures
    bool quick = false;       // reduced sample counts for smoke runs
    std::string out_path;
};

// flat "key = value" document; '#' starts a comment
SuiteConfig load_config_file(const std::string& path);

struct ReportRecord {
    std::string suite;
    std::string id;
    std::string identity;   // the verified law, written as a formula
    std::size_t samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    int criterion = 0;      // acceptance criterion fed by this record (0: none)
    double wall_ms = 0.0;
};

struct CalibrationSummary {
    bool valid = false;
    std::string measure_convention;
    std::vector<int> degrees;
    std::vector<double> c_moment;
    std::vector<double> c_kernel;
    std::string kernel_mode;
    std::string covariance_sides;
    std::string covariance_mode;
    std::string grid_descriptor;
};

struct Report {
    std::string suite;
    SuiteConfig config;
    CalibrationSummary calibration;
    std::vector<ReportRecord> records;

    bool all_pass() const;
    double worst_margin() const;  // max residual/tolerance over records
    std::string to_json(bool include_timing = true) const;
};

void write_report(const Report& r, const std::string& path);
Report report_from_json(const std::string& text);
Report merge_reports(const std::vector<Report>& parts);

struct ConvergenceRow {
    int order = 0;
    double value = 0.0;
    double error_estimate = 0.0;  // |value - previous value| (Richardson-style)
};

std::string convergence_csv(const std::string& integral_id,
                            const std::vector<ConvergenceRow>& rows);

}  // namespace mfn
