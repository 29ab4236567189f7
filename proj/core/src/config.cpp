#include "qtide/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qtide {

namespace {

using nlohmann::ordered_json;

bool is_blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

void reject_unknown_keys(const ordered_json& obj, const std::string& scope,
                         std::initializer_list<const char*> known) {
    for (const auto& item : obj.items()) {
        bool found = false;
        for (const char* k : known)
            if (item.key() == k) { found = true; break; }
        if (!found)
            throw ParseError("unknown config key: " +
                             (scope.empty() ? item.key() : scope + "." + item.key()));
    }
}

double get_number(const ordered_json& obj, const std::string& scope, const char* key,
                  double fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw ParseError("config key is not a number: " + scope + "." + key);
    return v.get<double>();
}

void check_positive(double v, const char* what) {
    if (!(v > 0.0)) throw ValidationError(std::string(what) + " must be strictly positive");
}

} // namespace

void validate(const ScenarioConfig& c) {
    check_positive(c.cube_edge_m, "circuit.L_m");
    check_positive(c.density_kg_m3, "circuit.rho_kg_m3");
    if (c.principal_n < 1) throw ValidationError("atom.n must be >= 1");
    if (c.drop_height_m < 0.0) throw ValidationError("drop.height_m must be nonnegative");
    check_positive(c.drop_step_s, "drop.step_s");
    if (c.drop_duration_s < c.drop_step_s)
        throw ValidationError("drop.duration_s must be at least drop.step_s");
    if (c.drop_separation_m < 0.0) throw ValidationError("drop.separation_m must be nonnegative");
    check_positive(c.brick_mass_kg, "cavendish.brick_mass_kg");
    check_positive(c.orbit_radius_m, "cavendish.orbit_radius_m");
    check_positive(c.rotation_hz, "cavendish.rotation_hz");
    if (c.noise_rms < 0.0) throw ValidationError("cavendish.noise_rms must be nonnegative");
}

ScenarioConfig load_config(const std::string& source) {
    ScenarioConfig cfg;
    if (is_blank(source)) return cfg;

    ordered_json doc;
    try {
        doc = ordered_json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed config document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("config document must be a JSON object");

    reject_unknown_keys(doc, "", {"circuit", "atom", "drop", "cavendish"});

    if (doc.contains("circuit")) {
        const auto& s = doc.at("circuit");
        reject_unknown_keys(s, "circuit", {"L_m", "rho_kg_m3"});
        cfg.cube_edge_m = get_number(s, "circuit", "L_m", cfg.cube_edge_m);
        cfg.density_kg_m3 = get_number(s, "circuit", "rho_kg_m3", cfg.density_kg_m3);
    }
    if (doc.contains("atom")) {
        const auto& s = doc.at("atom");
        reject_unknown_keys(s, "atom", {"n"});
        if (s.contains("n")) {
            if (!s.at("n").is_number_integer())
                throw ParseError("config key is not an integer: atom.n");
            cfg.principal_n = s.at("n").get<int>();
        }
    }
    if (doc.contains("drop")) {
        const auto& s = doc.at("drop");
        reject_unknown_keys(s, "drop", {"height_m", "duration_s", "step_s", "separation_m"});
        cfg.drop_height_m = get_number(s, "drop", "height_m", cfg.drop_height_m);
        cfg.drop_duration_s = get_number(s, "drop", "duration_s", cfg.drop_duration_s);
        cfg.drop_step_s = get_number(s, "drop", "step_s", cfg.drop_step_s);
        cfg.drop_separation_m = get_number(s, "drop", "separation_m", cfg.drop_separation_m);
    }
    if (doc.contains("cavendish")) {
        const auto& s = doc.at("cavendish");
        reject_unknown_keys(s, "cavendish",
                            {"brick_mass_kg", "orbit_radius_m", "rotation_hz", "noise_rms"});
        cfg.brick_mass_kg = get_number(s, "cavendish", "brick_mass_kg", cfg.brick_mass_kg);
        cfg.orbit_radius_m = get_number(s, "cavendish", "orbit_radius_m", cfg.orbit_radius_m);
        cfg.rotation_hz = get_number(s, "cavendish", "rotation_hz", cfg.rotation_hz);
        cfg.noise_rms = get_number(s, "cavendish", "noise_rms", cfg.noise_rms);
    }

    validate(cfg);
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& c) {
    ordered_json doc;
    doc["circuit"] = {{"L_m", c.cube_edge_m}, {"rho_kg_m3", c.density_kg_m3}};
    doc["atom"] = {{"n", c.principal_n}};
    doc["drop"] = {{"height_m", c.drop_height_m},
                   {"duration_s", c.drop_duration_s},
                   {"step_s", c.drop_step_s},
                   {"separation_m", c.drop_separation_m}};
    doc["cavendish"] = {{"brick_mass_kg", c.brick_mass_kg},
                        {"orbit_radius_m", c.orbit_radius_m},
                        {"rotation_hz", c.rotation_hz},
                        {"noise_rms", c.noise_rms}};
    return doc.dump(2) + "\n";
}

} // namespace qtide
