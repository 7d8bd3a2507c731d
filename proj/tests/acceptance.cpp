// Acceptance gate: runs every suite at the default configuration and prints
// one pass/fail line per acceptance criterion, aggregated from the tagged
// records. Exits nonzero if any criterion fails.

#include "mfn/suites.hpp"

#include <chrono>
#include <iostream>
#include <map>

namespace {

const char* criterion_text(int id) {
    switch (id) {
        case 1: return "representation laws: sym-power/rep multiplicativity, beta covariance";
        case 2: return "boost-section identity and P-dagger factorization";
        case 3: return "E(2) little-group structure and the phase cocycle";
        case 4: return "quadrature calibration of the invariant measure";
        case 5: return "moment identity and the fitted constants C_0 = C_1 = 2 pi";
        case 6: return "factor-space isometry, intertwining, invariance witnesses";
        case 7: return "conformal cocycle law and tau unitarity";
        case 8: return "kernel suite: symmetry, positivity, closed form, covariance";
        case 9: return "extension: gram invariance and the Poincare restriction";
        case 10: return "y-embedding limit";
        case 11: return "net covariance: intertwiners and support containment";
        case 12: return "causality separation";
    }
    return "?";
}

}  // namespace

int main() {
    using clock_type = std::chrono::steady_clock;
    mfn::SuiteConfig cfg;  // pinned defaults; tolerances fixed in the suites

    struct Tally {
        bool pass = true;
        double worst_ratio = 0.0;
        std::size_t records = 0;
    };
    std::map<int, Tally> tally;
    bool extras_pass = true;
    double total_ms = 0.0;

    for (const std::string& suite : mfn::registered_suites()) {
        const auto t0 = clock_type::now();
        mfn::Report rep;
        try {
            rep = mfn::run_suite(suite, cfg);
        } catch (const std::exception& e) {
            std::cout << "suite " << suite << " aborted: " << e.what() << "\n";
            extras_pass = false;
            continue;
        }
        const double ms =
            std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
        total_ms += ms;
        std::cout << "suite " << suite << ": " << rep.records.size() << " records, "
                  << (rep.all_pass() ? "all pass" : "FAILURES") << " (" << ms / 1000.0 << " s)\n";
        for (const auto& r : rep.records) {
            if (r.criterion == 0) {
                extras_pass = extras_pass && r.pass;
                if (!r.pass)
                    std::cout << "    supporting record FAILED: " << r.suite << "/" << r.id
                              << " residual " << r.max_residual << " tol " << r.tolerance << "\n";
                continue;
            }
            auto& t = tally[r.criterion];
            t.pass = t.pass && r.pass;
            t.records += 1;
            if (r.tolerance > 0.0) t.worst_ratio = std::max(t.worst_ratio, r.max_residual / r.tolerance);
            if (!r.pass)
                std::cout << "    criterion " << r.criterion << " record FAILED: " << r.suite
                          << "/" << r.id << " residual " << r.max_residual << " tol "
                          << r.tolerance << "\n";
        }
    }

    std::cout << "\n";
    bool all = extras_pass;
    for (int k = 1; k <= 12; ++k) {
        const auto it = tally.find(k);
        const bool ok = it != tally.end() && it->second.pass;
        all = all && ok;
        std::cout << "criterion " << k << (k < 10 ? "  " : " ") << (ok ? "PASS" : "FAIL") << "  ("
                  << (it == tally.end() ? 0 : it->second.records) << " records, worst margin "
                  << (it == tally.end() ? 0.0 : it->second.worst_ratio) << ")  "
                  << criterion_text(k) << "\n";
    }
    std::cout << "supporting records: " << (extras_pass ? "PASS" : "FAIL") << "\n";
    std::cout << "total " << total_ms / 1000.0 << " s\n";
    std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return all ? 0 : 1;
}
