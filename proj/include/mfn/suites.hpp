#pragma once

#include "mfn/report.hpp"

// Property suites behind `verify`: each runs a family of identity checks at
// fixed tolerances and returns one report. Deterministic given the config.

namespace mfn {

std::vector<std::string> registered_suites();
Report run_suite(const std::string& name, const SuiteConfig& cfg);

std::vector<std::string> registered_integrals();
std::vector<ConvergenceRow> convergence_study(const std::string& integral_id,
                                              const std::vector<int>& orders,
                                              const SuiteConfig& cfg);

CalibrationSummary run_calibration(const SuiteConfig& cfg);

}  // namespace mfn
