#pragma once

#include <cstdint>
#include <string>

#include "output.hpp"
#include "qtide/config.hpp"

namespace qtide::cli {

struct Options {
    std::string subcommand;
    std::string config_path;
    std::string out_path;          ///< empty: write to stdout
    std::string format = "json";   ///< "json" or "csv"
    std::uint64_t seed = 0;
    bool use_paper_approx = false; ///< use the n^4 a0^2 ring moment everywhere
    std::string alpha_override;    ///< fault injection for the reference report, "p/q"
};

/// Runs the named scenario and writes its output. Returns the process
/// exit status: 0 on success, 1 on a module error or failed reference
/// report.
int dispatch(const Options& options);

/// Command-line front end (argument parsing plus dispatch). Unknown
/// subcommands and malformed flags exit with status 2.
int run(int argc, const char* const* argv);

// Individual scenario renderers, exposed for tests.
OutputRecord run_rydberg(const ScenarioConfig& config, bool paper_approx);
OutputRecord run_shift(const ScenarioConfig& config, bool paper_approx);
OutputRecord run_force(const ScenarioConfig& config, bool paper_approx);
OutputRecord run_drop(const ScenarioConfig& config);
OutputRecord run_dumbbell();
OutputRecord run_circuit(const ScenarioConfig& config);
OutputRecord run_cavendish(const ScenarioConfig& config, std::uint64_t seed);

} // namespace qtide::cli
