#include "mfn/report.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mfn {

using nlohmann::json;

namespace {

json config_to_json(const SuiteConfig& c) {
    json j;
    j["radial_order"] = c.radial_order;
    j["angular_order"] = c.angular_order;
    j["radial_scale"] = c.radial_scale;
    j["seed"] = c.seed;
    j["n_min"] = c.n_min;
    j["n_max"] = c.n_max;
    j["tol_scale"] = c.tol_scale;
    j["sc_axis_order"] = c.sc_axis_order;
    j["quick"] = c.quick;
    return j;
}

SuiteConfig config_from_json(const json& j) {
    SuiteConfig c;
    c.radial_order = j.value("radial_order", c.radial_order);
    c.angular_order = j.value("angular_order", c.angular_order);
    c.radial_scale = j.value("radial_scale", c.radial_scale);
    c.seed = j.value("seed", c.seed);
    c.n_min = j.value("n_min", c.n_min);
    c.n_max = j.value("n_max", c.n_max);
    c.tol_scale = j.value("tol_scale", c.tol_scale);
    c.sc_axis_order = j.value("sc_axis_order", c.sc_axis_order);
    c.quick = j.value("quick", c.quick);
    return c;
}

}  // namespace

SuiteConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    SuiteConfig c;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) continue;
        if (key == "radial_order") c.radial_order = std::stoi(val);
        else if (key == "angular_order") c.angular_order = std::stoi(val);
        else if (key == "radial_scale") c.radial_scale = std::stod(val);
        else if (key == "seed") c.seed = std::stoull(val);
        else if (key == "n_min") c.n_min = std::stoi(val);
        else if (key == "n_max") c.n_max = std::stoi(val);
        else if (key == "tol_scale") c.tol_scale = std::stod(val);
        else if (key == "sc_axis_order") c.sc_axis_order = std::stoi(val);
        else if (key == "quick") c.quick = (val == "1" || val == "true");
        else if (key == "out") c.out_path = val;
        else throw std::runtime_error("unknown config key: " + key);
    }
    if (c.tol_scale < 0.0) throw std::runtime_error("config: tol_scale must be nonnegative");
    if (c.n_max > 6 || c.n_min < 0 || c.n_min > c.n_max)
        throw std::runtime_error("config: need 0 <= n_min <= n_max <= 6");
    return c;
}

bool Report::all_pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

double Report::worst_margin() const {
    double m = 0.0;
    for (const auto& r : records)
        if (r.tolerance > 0.0) m = std::max(m, r.max_residual / r.tolerance);
    return m;
}

std::string Report::to_json(bool include_timing) const {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["suite"] = suite;
    j["config"] = config_to_json(config);
    if (calibration.valid) {
        json c;
        c["measure_convention"] = calibration.measure_convention;
        c["degrees"] = calibration.degrees;
        c["c_moment"] = calibration.c_moment;
        c["c_kernel"] = calibration.c_kernel;
        c["kernel_mode"] = calibration.kernel_mode;
        c["covariance_sides"] = calibration.covariance_sides;
        c["covariance_mode"] = calibration.covariance_mode;
        c["grid"] = calibration.grid_descriptor;
        j["calibration"] = c;
    }
    j["records"] = json::array();
    for (const auto& r : records) {
        json rec;
        rec["suite"] = r.suite;
        rec["id"] = r.id;
        rec["identity"] = r.identity;
        rec["samples"] = r.samples;
        rec["max_residual"] = r.max_residual;
        rec["tolerance"] = r.tolerance;
        rec["pass"] = r.pass;
        rec["criterion"] = r.criterion;
        if (include_timing) rec["wall_ms"] = r.wall_ms;
        j["records"].push_back(rec);
    }
    j["pass"] = all_pass();
    return j.dump(2);
}

void write_report(const Report& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report: " + path);
    out << r.to_json() << "\n";
}

Report report_from_json(const std::string& text) {
    const json j = json::parse(text);
    Report r;
    r.suite = j.value("suite", "");
    if (j.contains("config")) r.config = config_from_json(j["config"]);
    if (j.contains("calibration")) {
        const auto& c = j["calibration"];
        r.calibration.valid = true;
        r.calibration.measure_convention = c.value("measure_convention", "");
        r.calibration.degrees = c.value("degrees", std::vector<int>{});
        r.calibration.c_moment = c.value("c_moment", std::vector<double>{});
        r.calibration.c_kernel = c.value("c_kernel", std::vector<double>{});
        r.calibration.kernel_mode = c.value("kernel_mode", "");
        r.calibration.covariance_sides = c.value("covariance_sides", "");
        r.calibration.covariance_mode = c.value("covariance_mode", "");
        r.calibration.grid_descriptor = c.value("grid", "");
    }
    for (const auto& rec : j.value("records", json::array())) {
        ReportRecord rr;
        rr.suite = rec.value("suite", "");
        rr.id = rec.value("id", "");
        rr.identity = rec.value("identity", "");
        rr.samples = rec.value("samples", std::size_t{0});
        rr.max_residual = rec.value("max_residual", 0.0);
        rr.tolerance = rec.value("tolerance", 0.0);
        rr.pass = rec.value("pass", false);
        rr.criterion = rec.value("criterion", 0);
        rr.wall_ms = rec.value("wall_ms", 0.0);
        r.records.push_back(std::move(rr));
    }
    return r;
}

Report merge_reports(const std::vector<Report>& parts) {
    Report merged;
    merged.suite = "merged";
    if (!parts.empty()) merged.config = parts.front().config;
    for (const auto& p : parts) {
        if (p.calibration.valid && !merged.calibration.valid) merged.calibration = p.calibration;
        merged.records.insert(merged.records.end(), p.records.begin(), p.records.end());
    }
    return merged;
}

std::string convergence_csv(const std::string& integral_id,
                            const std::vector<ConvergenceRow>& rows) {
    std::ostringstream os;
    os << "integral,order,value,error_estimate\n";
    os.precision(16);
    for (const auto& r : rows)
        os << integral_id << "," << r.order << "," << r.value << "," << r.error_estimate << "\n";
    return os.str();
}

}  // namespace mfn
