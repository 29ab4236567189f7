#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtide/config.hpp"
#include "qtide/electrostatics.hpp"

namespace qtide::cli {

/// Inputs of the reference report. alpha is exposed so a fault can be
/// injected deliberately (the report must then go red and exit nonzero).
struct ReportOptions {
    ScenarioConfig config;
    std::uint64_t seed = 0;
    electrostatics::Rational alpha = electrostatics::Rational(11, 18);
};

struct CheckResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;
    std::string text;
    bool all_passed;
};

/// Recomputes every headline quantity of the workbench and verifies it
/// against its pinned expectation, one pass/fail line per check. The
/// text is byte-stable for a given seed.
Report build_reference_report(const ReportOptions& options);

} // namespace qtide::cli
