#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfn/suites.hpp"

#include <cstdio>
#include <fstream>

using namespace mfn;

TEST_CASE("suite registry and unknown names") {
    const auto suites = registered_suites();
    CHECK(suites.size() == 9);
    SuiteConfig cfg;
    cfg.quick = true;
    CHECK_THROWS_AS(run_suite("no-such-suite", cfg), std::invalid_argument);
}

TEST_CASE("config file parsing") {
    const std::string path = "/tmp/mfn_test_config.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n"
            << "radial_order = 24\n"
            << "angular_order = 12\n"
            << "seed = 99\n"
            << "n_min = 1\n"
            << "n_max = 2\n"
            << "tol_scale = 2.0  # inline comment\n";
    }
    const SuiteConfig cfg = load_config_file(path);
    CHECK(cfg.radial_order == 24);
    CHECK(cfg.angular_order == 12);
    CHECK(cfg.seed == 99);
    CHECK(cfg.n_min == 1);
    CHECK(cfg.n_max == 2);
    CHECK(cfg.tol_scale == 2.0);

    {
        std::ofstream out(path);
        out << "bogus_key = 1\n";
    }
    CHECK_THROWS(load_config_file(path));
    {
        std::ofstream out(path);
        out << "tol_scale = -1\n";
    }
    CHECK_THROWS(load_config_file(path));
    std::remove(path.c_str());
}

TEST_CASE("suites are deterministic given the seed, timing aside") {
    SuiteConfig cfg;
    cfg.quick = true;
    cfg.radial_order = 16;
    cfg.angular_order = 10;
    const Report a = run_suite("spin", cfg);
    const Report b = run_suite("spin", cfg);
    CHECK(a.to_json(false) == b.to_json(false));

    SuiteConfig other = cfg;
    other.seed = cfg.seed + 1;
    const Report c = run_suite("spin", other);
    CHECK(a.to_json(false) != c.to_json(false));
}

TEST_CASE("strict tolerances fail: tol_scale 0 is rejected, a tiny scale trips records") {
    SuiteConfig cfg;
    cfg.quick = true;
    cfg.radial_order = 16;
    cfg.angular_order = 10;
    cfg.tol_scale = 1e-16;  // below roundoff: the numerics cannot pass
    const Report r = run_suite("spin", cfg);
    CHECK(!r.all_pass());
}

TEST_CASE("report json round trip and merge") {
    SuiteConfig cfg;
    cfg.quick = true;
    cfg.radial_order = 16;
    cfg.angular_order = 10;
    const Report a = run_suite("spin", cfg);
    const Report back = report_from_json(a.to_json());
    CHECK(back.suite == a.suite);
    CHECK(back.records.size() == a.records.size());
    CHECK(back.all_pass() == a.all_pass());
    for (std::size_t i = 0; i < back.records.size(); ++i) {
        CHECK(back.records[i].id == a.records[i].id);
        CHECK(back.records[i].max_residual == a.records[i].max_residual);
        CHECK(back.records[i].criterion == a.records[i].criterion);
    }

    const Report b = run_suite("convergence", cfg);
    const Report merged = merge_reports({a, b});
    CHECK(merged.records.size() == a.records.size() + b.records.size());
    CHECK(merged.all_pass() == (a.all_pass() && b.all_pass()));
}

TEST_CASE("record pass flag encodes residual <= tolerance") {
    SuiteConfig cfg;
    cfg.quick = true;
    cfg.radial_order = 16;
    cfg.angular_order = 10;
    const Report r = run_suite("poincare", cfg);
    for (const auto& rec : r.records) CHECK(rec.pass == (rec.max_residual <= rec.tolerance));
}

TEST_CASE("convergence studies produce monotone tables for the references") {
    SuiteConfig cfg;
    cfg.quick = true;
    const auto rows = convergence_study("exp-2p0", {6, 10, 16, 24}, cfg);
    CHECK(rows.size() == 4);
    for (std::size_t i = 2; i < rows.size(); ++i) {
        if (rows[i].error_estimate > 1e-14) CHECK(rows[i].error_estimate < rows[i - 1].error_estimate);
    }
    const std::string csv = convergence_csv("exp-2p0", rows);
    CHECK(csv.find("integral,order,value,error_estimate") == 0);
    CHECK(csv.find("exp-2p0,6,") != std::string::npos);
    CHECK_THROWS_AS(convergence_study("no-such-integral", {4, 8}, cfg), std::invalid_argument);
    CHECK(convergence_study("exp-p0", {}, cfg).empty());
}

TEST_CASE("calibration summary carries the frozen assignments") {
    SuiteConfig cfg;
    cfg.radial_order = 24;
    cfg.angular_order = 16;
    const CalibrationSummary s = run_calibration(cfg);
    CHECK(s.valid);
    CHECK(s.kernel_mode == "transpose");
    CHECK(s.covariance_sides == "swapped");
    CHECK(s.degrees.size() >= 3);
    CHECK(std::abs(s.c_moment[0] - 2.0 * 3.14159265358979) < 1e-5);
    CHECK(s.measure_convention.find("d^3p / (2 p0)") != std::string::npos);
}
