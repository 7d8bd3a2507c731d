#include "mfn/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

mfn::SuiteConfig build_config(const std::string& config_path, int radial, int angular,
                              std::uint64_t seed, double tol_scale, const std::string& nrange,
                              const std::string& out) {
    mfn::SuiteConfig cfg;
    if (!config_path.empty()) cfg = mfn::load_config_file(config_path);
    if (radial > 0) cfg.radial_order = radial;
    if (angular > 0) cfg.angular_order = angular;
    if (seed != 0) cfg.seed = seed;
    if (tol_scale >= 0.0) cfg.tol_scale = tol_scale;
    if (!out.empty()) cfg.out_path = out;
    if (!nrange.empty()) {
        const auto dots = nrange.find("..");
        if (dots == std::string::npos) {
            cfg.n_min = cfg.n_max = std::stoi(nrange);
        } else {
            cfg.n_min = std::stoi(nrange.substr(0, dots));
            cfg.n_max = std::stoi(nrange.substr(dots + 2));
        }
        if (cfg.n_min < 0 || cfg.n_min > cfg.n_max || cfg.n_max > 6)
            throw CLI::ValidationError("--n", "need 0 <= n_min <= n_max <= 6");
    }
    return cfg;
}

int emit_report(const mfn::Report& rep) {
    for (const auto& r : rep.records) {
        std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.suite << "/" << r.id
                  << "  residual=" << r.max_residual << "  tol=" << r.tolerance;
        if (r.criterion) std::cout << "  [criterion " << r.criterion << "]";
        std::cout << "\n";
    }
    if (!rep.config.out_path.empty()) {
        mfn::write_report(rep, rep.config.out_path);
        std::cout << "report written to " << rep.config.out_path << "\n";
    } else {
        std::cout << rep.to_json() << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification driver for the massless helicity representations, the conformal "
                 "kernels, and the free-net axioms"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path, nrange, out;
    int radial = 0, angular = 0;
    std::uint64_t seed = 0;
    double tol_scale = -1.0;
    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--n", nrange, "degree or degree range, e.g. 1 or 0..2");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--radial-order", radial, "radial quadrature order");
    app.add_option("--angular-order", angular, "angular quadrature order");
    app.add_option("--tol-scale", tol_scale, "multiply every tolerance (0 = strict)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--out", out, "output path (JSON report / CSV table)");

    auto* cal = app.add_subcommand("calibrate", "fit the moment constants and extension mode");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(mfn::registered_suites()));

    std::string integral;
    std::vector<int> orders;
    auto* conv = app.add_subcommand("converge", "radial-order convergence table");
    conv->add_option("integral", integral, "integral id")
        ->required()
        ->check(CLI::IsMember(mfn::registered_integrals()));
    conv->add_option("--orders", orders, "radial order ladder");

    auto* report = app.add_subcommand("report", "report utilities");
    report->require_subcommand(1);
    std::vector<std::string> merge_inputs;
    auto* merge = report->add_subcommand("merge", "merge JSON reports");
    merge->add_option("files", merge_inputs, "input reports")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const mfn::SuiteConfig cfg =
            build_config(config_path, radial, angular, seed, tol_scale, nrange, out);

        if (*cal) {
            const mfn::CalibrationSummary s = mfn::run_calibration(cfg);
            std::cout << "measure convention: " << s.measure_convention << "\n";
            for (std::size_t i = 0; i < s.degrees.size(); ++i)
                std::cout << "n=" << s.degrees[i] << "  C_n=" << s.c_moment[i]
                          << "  kernel constant=" << s.c_kernel[i] << "\n";
            std::cout << "extension mode: " << s.kernel_mode
                      << "  covariance sides: " << s.covariance_sides << "\n"
                      << "grid: " << s.grid_descriptor << "\n";
            if (!cfg.out_path.empty()) {
                mfn::Report rep;
                rep.suite = "calibrate";
                rep.config = cfg;
                rep.calibration = s;
                mfn::write_report(rep, cfg.out_path);
            }
            return 0;
        }
        if (*verify) {
            return emit_report(mfn::run_suite(suite, cfg));
        }
        if (*conv) {
            std::vector<int> ladder = orders;
            if (ladder.empty()) ladder = {8, 12, 16, 24, 32, 48, 64};
            const auto rows = mfn::convergence_study(integral, ladder, cfg);
            const std::string csv = mfn::convergence_csv(integral, rows);
            if (!cfg.out_path.empty()) {
                std::ofstream f(cfg.out_path);
                f << csv;
            } else {
                std::cout << csv;
            }
            // reference integrals must improve monotonically along the ladder
            if (integral == "exp-p0" || integral == "exp-2p0") {
                for (std::size_t i = 2; i < rows.size(); ++i)
                    if (rows[i].error_estimate > rows[i - 1].error_estimate &&
                        rows[i].error_estimate > 1e-13)
                        return 1;
            }
            return 0;
        }
        if (*merge) {
            std::vector<mfn::Report> parts;
            for (const auto& path : merge_inputs) {
                std::ifstream in(path);
                if (!in) throw std::runtime_error("cannot open " + path);
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                parts.push_back(mfn::report_from_json(text));
            }
            mfn::Report merged = mfn::merge_reports(parts);
            merged.config.out_path = cfg.out_path;
            return emit_report(merged);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
