#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "qtide/cavendish.hpp"
#include "qtide/constants.hpp"
#include "qtide/electrostatics.hpp"
#include "qtide/freefall.hpp"
#include "qtide/perturbation.hpp"
#include "qtide/rydberg.hpp"
#include "report.hpp"

namespace qtide::cli {

namespace {

using rydberg::MomentModel;

MomentModel moment_model(bool paper_approx) {
    return paper_approx ? MomentModel::asymptotic : MomentModel::exact;
}

const char* moment_origin(bool paper_approx) {
    return paper_approx ? "<x^2+y^2> ~ a_n^2 = n^4 a0^2" : "<x^2+y^2> = n^3 (n+1) a0^2";
}

ordered_json circuit_inputs(const ScenarioConfig& config) {
    return {{"L_m", config.cube_edge_m}, {"rho_kg_m3", config.density_kg_m3}};
}

electrostatics::Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return electrostatics::Rational(std::stoll(text));
        return electrostatics::Rational(std::stoll(text.substr(0, slash)),
                                        std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational: " + text);
    }
}

void write_output(const Options& options, const std::string& content) {
    if (options.out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(options.out_path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + options.out_path);
    out << content;
}

} // namespace

OutputRecord run_rydberg(const ScenarioConfig& config, bool paper_approx) {
    const int n = config.principal_n;
    const auto state = rydberg::circular_state(n);
    const MomentModel model = moment_model(paper_approx);

    OutputRecord record;
    record.subcommand = "rydberg";
    record.inputs = {{"n", n}};
    record.add_row("l", static_cast<double>(state.l), "1", "stretch state l = n-1");
    record.add_row("m", static_cast<double>(state.m_quantum), "1", "stretch state m = n-1");
    record.add_row("orbit_radius", rydberg::orbit_radius(state), "m", "a_n = n^2 a0");
    record.add_row("transverse_moment", rydberg::transverse_moment(state, model), "m^2",
                   moment_origin(paper_approx));
    record.add_row("rms_transverse_size", rydberg::rms_transverse_size(state, model), "m",
                   "sqrt(<x^2+y^2>)");
    record.add_row("magnetic_moment", rydberg::magnetic_moment(n), "J/T", "mu_n = n mu_B");
    record.add_row("trapped_flux_equivalent", rydberg::trapped_flux(n), "Wb",
                   "Phi_n = n h/(2e)");
    if (n >= 2) {
        const double gap = rydberg::transition_frequency(n, n - 1);
        record.add_row("adjacent_gap_frequency", gap, "Hz",
                       "nu = R_inf c (1/n_lo^2 - 1/n_hi^2)");
        const bool adiabatic = rydberg::adiabaticity_check(
            rydberg::QuantumSystemKind::rydberg_atom(), gap, config.rotation_hz, 100.0);
        record.add_row("adiabatic_vs_platform_drive", adiabatic ? "true" : "false", "1",
                       "drive * margin < gap");
    }
    if (n <= 200)
        record.add_row("normalization_residual", rydberg::normalization_check(state), "1",
                       "log-domain quadrature of |Psi|^2");
    return record;
}

OutputRecord run_shift(const ScenarioConfig& config, bool paper_approx) {
    const auto state = rydberg::circular_state(config.principal_n);
    const auto earth = gravito::TidalFieldModel::earth();
    const MomentModel model = moment_model(paper_approx);
    const double field_tesla = 1.0;
    const double t = 1.0;

    OutputRecord record;
    record.subcommand = "shift";
    record.inputs = {{"n", config.principal_n}, {"B_tesla", field_tesla}, {"t_s", t}};
    record.add_row("diamagnetic_shift", gravito::diamagnetic_shift(state, field_tesla, model),
                   "J", "dE = (e^2 B^2 / 8 m) <x^2+y^2>");
    record.add_row("tidal_shift", gravito::gravitational_shift(state, t, earth, model), "J",
                   "dE = (m/2) (g t / R_E)^2 <x^2+y^2>");
    const PhysicalConstants& c = constants();
    const double equivalent_field = 2.0 * c.electron_mass * c.surface_gravity * t /
                                    (c.earth_radius * c.electron_charge);
    record.add_row("field_equivalent_to_tide", equivalent_field, "T",
                   "e B / (2 m) = g t / R_E");
    record.add_row("moment_model", paper_approx ? "asymptotic" : "exact", "1",
                   moment_origin(paper_approx));
    return record;
}

OutputRecord run_force(const ScenarioConfig& config, bool paper_approx) {
    const auto state = rydberg::circular_state(config.principal_n);
    const auto earth = gravito::TidalFieldModel::earth();
    const MomentModel model = moment_model(paper_approx);
    const double t = 1.0;

    OutputRecord record;
    record.subcommand = "force";
    record.inputs = {{"n", config.principal_n},
                     {"grad_B2_T2_per_m", 1.0},
                     {"t_s", t},
                     {"r_m", earth.earth_radius}};
    const Vec3 magnetic = gravito::magnetic_force(state, {1.0, 0.0, 0.0}, model);
    record.add_row("magnetic_force_x", magnetic[0], "N",
                   "F = -(e^2 <x^2+y^2> / 8 m) grad(B^2)");
    const Vec3 tidal = gravito::gravitational_force(state, t, earth.earth_radius, earth, model);
    record.add_row("tidal_force_up", tidal[2], "N",
                   "F = 3 m <x^2+y^2> t^2 (G M_E)^2 / r^7");
    record.add_row("moment_model", paper_approx ? "asymptotic" : "exact", "1",
                   moment_origin(paper_approx));
    return record;
}

OutputRecord run_drop(const ScenarioConfig& config) {
    freefall::FallScenario scenario;
    scenario.separation_m = config.drop_separation_m;
    scenario.drop_height_m = config.drop_height_m;
    scenario.duration_s = config.drop_duration_s;
    scenario.step_s = config.drop_step_s;
    const auto pair = freefall::simulate_pair(scenario);

    OutputRecord record;
    record.subcommand = "drop";
    record.inputs = {{"separation_m", scenario.separation_m},
                     {"height_m", scenario.drop_height_m},
                     {"duration_s", scenario.duration_s},
                     {"step_s", scenario.step_s},
                     {"mode", "independent-points"}};

    const auto theta = freefall::convergence_angle(scenario.separation_m);
    record.add_row("convergence_angle", theta.radians, "rad", "theta = L / R_E");
    if (!theta.small_angle_valid)
        record.add_row("small_angle_valid", "false", "1", "theta = L / R_E beyond 1e-2");
    record.add_row("horizontal_accel_per_point",
                   freefall::horizontal_accel(0.5 * scenario.separation_m), "m/s^2",
                   "g' = g x / R_E");
    const double shrink = pair.separation(0) - pair.separation(pair.size() - 1);
    record.add_row("separation_shrinkage", shrink, "m", "RK4 integration");
    const double closed = constants().surface_gravity * scenario.separation_m /
                          (2.0 * constants().earth_radius) * scenario.duration_s *
                          scenario.duration_s;
    record.add_row("separation_shrinkage_closed_form", closed, "m",
                   "d = g L t^2 / (2 R_E)");
    record.add_row("convergence_angle_observed", pair.convergence_angle_observed(), "rad",
                   "RK4 integration");

    record.csv_header = {"t", "x1", "z1", "x2", "z2", "separation"};
    record.csv_rows.reserve(pair.size());
    for (std::size_t i = 0; i < pair.size(); ++i)
        record.csv_rows.push_back({pair.time[i], pair.position1[i][0], pair.position1[i][2],
                                   pair.position2[i][0], pair.position2[i][2],
                                   pair.separation(i)});
    return record;
}

OutputRecord run_dumbbell() {
    using electrostatics::Rational;
    const auto pair = electrostatics::DumbbellPair::canonical();
    const Rational nominal(-2, 3);

    OutputRecord record;
    record.subcommand = "dumbbell";
    record.inputs = {{"layout", "(-Q at 0, +Q at L), (+Q at 2L, -Q at 3L)"}};

    std::ostringstream alpha_text;
    alpha_text << electrostatics::alpha_constant();
    record.results["alpha"] = alpha_text.str();
    record.results["alpha_float"] = static_cast<double>(electrostatics::alpha_constant());
    std::ostringstream nominal_text;
    nominal_text << nominal;
    record.results["beta_nominal"] = nominal_text.str();

    bool reproduced = false;
    ordered_json candidates = ordered_json::array();
    for (const auto& candidate : electrostatics::dumbbell_voltage_candidates(pair)) {
        std::ostringstream value_text;
        value_text << candidate.value;
        const bool equal = candidate.value == nominal;
        reproduced = reproduced || equal;
        candidates.push_back(
            {{"convention", std::string(electrostatics::convention_name(candidate.convention))},
             {"description",
              std::string(electrostatics::convention_description(candidate.convention))},
             {"value", value_text.str()},
             {"value_float", static_cast<double>(candidate.value)},
             {"equals_nominal", equal}});
        record.add_row("beta[" + std::string(electrostatics::convention_name(
                                     candidate.convention)) + "]",
                       value_text.str(), "Q/(4 pi eps0 L)",
                       "exact end-potential difference, inner minus outer");
    }
    record.results["candidates"] = candidates;
    record.results["nominal_reproduced"] = reproduced;
    record.add_row("alpha", alpha_text.str(), "Q^2/(4 pi eps0 L^2)",
                   "exact pairwise Coulomb sum");
    return record;
}

OutputRecord run_circuit(const ScenarioConfig& config) {
    const auto eq = electrostatics::equilibrium_solve(config.density_kg_m3, config.cube_edge_m);
    const double scale =
        electrostatics::freefall_voltage_scale(config.density_kg_m3, config.cube_edge_m);

    OutputRecord record;
    record.subcommand = "circuit";
    record.inputs = circuit_inputs(config);

    std::ostringstream alpha_text, beta_text;
    alpha_text << eq.alpha;
    beta_text << eq.beta;
    record.results["alpha"] = alpha_text.str();
    record.results["Q_coulomb"] = eq.charge_coulomb;
    record.results["V_volt"] = eq.voltage_volt;
    record.results["F_tidal_newton"] = eq.tidal_force_newton;
    record.results["residual"] = eq.residual;
    record.results["beta_convention"] = "nominal " + beta_text.str();

    record.add_row("Q", eq.charge_coulomb, "C", "Q = sqrt(F_tidal 4 pi eps0 L^2 / alpha)");
    record.add_row("V", eq.voltage_volt, "V", "V = |beta| Q / (4 pi eps0 L)");
    record.add_row("V_sign", static_cast<double>(eq.voltage_sign), "1", "sign of beta");
    record.add_row("F_tidal", eq.tidal_force_newton, "N", "F = rho g L^4 / R_E");
    record.add_row("F_coulomb", eq.coulomb_force_newton, "N",
                   "F = alpha Q^2 / (4 pi eps0 L^2)");
    record.add_row("residual", eq.residual, "1", "|F_coulomb - F_tidal| / F_tidal");
    record.add_row("V_FF", scale, "V", "V_FF = sqrt(rho g L^4 / (4 pi eps0 R_E))");
    return record;
}

OutputRecord run_cavendish(const ScenarioConfig& config, std::uint64_t seed) {
    cavendish::SourceAssembly assembly;
    assembly.pile_mass_kg = config.brick_mass_kg;
    assembly.orbit_radius_m = config.orbit_radius_m;
    assembly.rotation_hz = config.rotation_hz;
    assembly.validate();

    const double target_hz = 2.0 * assembly.rotation_hz;
    const double dt = (1.0 / target_hz) / 64.0;
    const std::size_t samples = 1024; // 16 whole periods of the 2f line

    cavendish::TimeSeries charge;
    charge.dt = dt;
    charge.values.reserve(samples);
    std::vector<double> deflection;
    deflection.reserve(samples);
    const Vec3 bob{0.5 * config.cube_edge_m, 0.0, 0.0};
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = static_cast<double>(k) * dt;
        charge.values.push_back(cavendish::predicted_charge_signal(assembly, config, t));
        const double phase = 2.0 * std::numbers::pi * assembly.rotation_hz * t;
        deflection.push_back(
            cavendish::pendulum_deflection(cavendish::source_field(assembly, phase, bob)[0]));
    }
    const cavendish::TimeSeries measured = cavendish::add_noise(charge, config.noise_rms, seed);
    const double integration = 12.0 / target_hz;
    const auto detection =
        cavendish::synchronous_detect(measured, assembly.rotation_hz, 2, integration);

    OutputRecord record;
    record.subcommand = "cavendish";
    record.inputs = {{"brick_mass_kg", assembly.pile_mass_kg},
                     {"orbit_radius_m", assembly.orbit_radius_m},
                     {"rotation_hz", assembly.rotation_hz},
                     {"noise_rms", config.noise_rms},
                     {"L_m", config.cube_edge_m},
                     {"rho_kg_m3", config.density_kg_m3},
                     {"seed", seed}};
    record.results["detection"] = {{"harmonic", detection.harmonic},
                                   {"amplitude", detection.amplitude},
                                   {"phase_rad", detection.phase_rad},
                                   {"noise_floor", detection.noise_floor},
                                   {"seed", seed}};

    record.add_row("charge_2f_amplitude", detection.amplitude, "C", "lock-in projection");
    record.add_row("earth_only_charge", cavendish::predicted_charge_signal(config), "C",
                   "Q = sqrt(F_tidal 4 pi eps0 L^2 / alpha)");
    record.add_row("static_deflection_scale",
                   cavendish::pendulum_deflection(
                       norm(cavendish::source_field(assembly, 0.0, {0.0, 0.0, 0.0}))),
                   "rad", "deflection = a_h / g at the platform center");
    record.add_row("peak_bob_deflection",
                   *std::max_element(deflection.begin(), deflection.end(),
                                     [](double a, double b) {
                                         return std::abs(a) < std::abs(b);
                                     }),
                   "rad", "deflection = a_h / g");

    record.csv_header = {"t", "charge_C", "deflection_rad"};
    record.csv_rows.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k)
        record.csv_rows.push_back(
            {static_cast<double>(k) * dt, measured.values[k], deflection[k]});
    return record;
}

int dispatch(const Options& options) {
    try {
        check_constant_consistency();
        const ScenarioConfig config = options.config_path.empty()
                                          ? ScenarioConfig{}
                                          : load_config_file(options.config_path);

        if (options.subcommand == "reproduce-paper") {
            ReportOptions report_options;
            report_options.config = config;
            report_options.seed = options.seed;
            if (!options.alpha_override.empty())
                report_options.alpha = parse_rational(options.alpha_override);
            const Report report = build_reference_report(report_options);
            write_output(options, report.text);
            return report.all_passed ? 0 : 1;
        }

        OutputRecord record;
        if (options.subcommand == "rydberg")
            record = run_rydberg(config, options.use_paper_approx);
        else if (options.subcommand == "shift")
            record = run_shift(config, options.use_paper_approx);
        else if (options.subcommand == "force")
            record = run_force(config, options.use_paper_approx);
        else if (options.subcommand == "drop")
            record = run_drop(config);
        else if (options.subcommand == "dumbbell")
            record = run_dumbbell();
        else if (options.subcommand == "circuit")
            record = run_circuit(config);
        else if (options.subcommand == "cavendish")
            record = run_cavendish(config, options.seed);
        else {
            std::cerr << "unknown subcommand: " << options.subcommand << "\n";
            return 2;
        }
        write_output(options, options.format == "csv" ? record.to_csv() : record.to_json());
        return 0;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    CLI::App app{"desk-scale workbench: tidal gravity acting on coherent quantum systems"};
    app.fallthrough();

    Options options;
    app.add_option("--config", options.config_path, "JSON scenario config file");
    app.add_option("--out", options.out_path, "output path (default: stdout)");
    app.add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--seed", options.seed, "seed for synthesized noise")->capture_default_str();
    app.add_flag("--use-paper-approx", options.use_paper_approx,
                 "use the large-n ring value n^4 a0^2 for <x^2+y^2> everywhere");
    app.add_option("--override-alpha", options.alpha_override)->group("");

    app.require_subcommand(1);
    app.add_subcommand("rydberg", "circular-state geometry, moments, and gaps");
    app.add_subcommand("shift", "first-order magnetic and tidal energy shifts");
    app.add_subcommand("force", "low-field-seeker forces on the circular state");
    app.add_subcommand("drop", "two-point free-fall trajectories (CSV-friendly)");
    app.add_subcommand("dumbbell", "exact dumbbell electrostatics constants");
    app.add_subcommand("circuit", "charge-separation equilibrium of the cube pair");
    app.add_subcommand("cavendish", "rotating-source signal synthesis and lock-in detection");
    app.add_subcommand("reproduce-paper", "run every reference check and report pass/fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForAllHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 2;
    }

    options.subcommand = app.get_subcommands().front()->get_name();
    return dispatch(options);
}

} // namespace qtide::cli
