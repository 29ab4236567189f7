#pragma once

#include <string>

#include "qtide/errors.hpp"

namespace qtide {

/// Scenario parameters shared by the drop, circuit, and rotating-source
/// models. Defaults are the workbench's reference scenario: a 1 cm
/// superconducting cube of density 1e4 kg/m^3 and an n = 100 atom.
struct ScenarioConfig {
    // circuit
    double cube_edge_m = 0.01;
    double density_kg_m3 = 1.0e4;
    // atom
    int principal_n = 100;
    // drop
    double drop_height_m = 100.0;
    double drop_duration_s = 1.0;
    double drop_step_s = 1.0e-3;
    double drop_separation_m = 1.0;
    // cavendish
    double brick_mass_kg = 500.0;
    double orbit_radius_m = 0.5;
    double rotation_hz = 0.01;
    double noise_rms = 0.0;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Throws ValidationError if any field violates its constraint
/// (lengths, masses, densities, frequencies positive; n >= 1; the drop
/// grid well formed; noise_rms nonnegative).
void validate(const ScenarioConfig& config);

/// Parses a JSON config document. An empty (or whitespace-only) source
/// yields the defaults. Recognized top-level keys are "circuit", "atom",
/// "drop", and "cavendish"; unknown keys at any level are rejected with a
/// ParseError naming the key. Values failing validation raise
/// ValidationError.
ScenarioConfig load_config(const std::string& source);

/// load_config over the contents of a file.
ScenarioConfig load_config_file(const std::string& path);

/// Canonical JSON rendering: fixed key order, every key present.
/// load_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

} // namespace qtide
