#include "qtide/cavendish.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qtide/constants.hpp"
#include "qtide/electrostatics.hpp"

namespace qtide::cavendish {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vec3 pile_position(const SourceAssembly& assembly, double phase_angle, int pile) {
    const double angle = phase_angle + kTwoPi * pile / assembly.pile_count;
    return {assembly.orbit_radius_m * std::cos(angle), assembly.orbit_radius_m * std::sin(angle),
            0.0};
}

// Shared equilibrium composition: the converging drive (m/s^2 per cube)
// enters the same balance as the Earth tide g L / R_E does.
double charge_for_drive(const ScenarioConfig& circuit, double drive) {
    const double edge = circuit.cube_edge_m;
    const double alpha = static_cast<double>(electrostatics::alpha_constant());
    const double force = circuit.density_kg_m3 * edge * edge * edge * drive;
    const double kq = 4.0 * std::numbers::pi * constants().vacuum_permittivity * edge * edge;
    const double magnitude = std::sqrt(std::abs(force) * kq / alpha);
    return force < 0.0 ? -magnitude : magnitude;
}

} // namespace

void SourceAssembly::validate() const {
    if (!(pile_mass_kg > 0.0) || !(orbit_radius_m > 0.0) || !(rotation_hz > 0.0))
        throw DomainError("source assembly: mass, radius, and frequency must be positive");
    if (pile_count < 1) throw DomainError("source assembly: pile_count must be >= 1");
}

Vec3 source_field(const SourceAssembly& assembly, double phase_angle, const Vec3& eval_point) {
    assembly.validate();
    if (norm(eval_point) >= assembly.orbit_radius_m)
        throw DomainError("source_field: evaluation point must lie inside the orbit");
    const double gm = constants().gravitational_constant * assembly.pile_mass_kg;
    Vec3 field{0.0, 0.0, 0.0};
    for (int pile = 0; pile < assembly.pile_count; ++pile) {
        const Vec3 offset = pile_position(assembly, phase_angle, pile) - eval_point;
        const double distance = norm(offset);
        if (distance == 0.0)
            throw SingularityError("source_field: evaluation point coincides with a pile");
        field = field + (gm / (distance * distance * distance)) * offset;
    }
    return field;
}

double pendulum_deflection(double horizontal_accel) {
    const double g = constants().surface_gravity;
    if (std::abs(horizontal_accel) >= 1e-2 * g)
        throw DomainError("pendulum_deflection: field too large for the small-angle model");
    return horizontal_accel / g;
}

TimeSeries add_noise(const TimeSeries& series, double rms, std::uint64_t seed) {
    if (rms < 0.0) throw DomainError("add_noise: rms must be nonnegative");
    TimeSeries noisy = series;
    if (rms == 0.0) return noisy;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, rms);
    for (double& v : noisy.values) v += gauss(rng);
    return noisy;
}

DetectionResult synchronous_detect(const TimeSeries& signal, double rotation_hz, int harmonic,
                                   double integration_time_s) {
    if (signal.dt <= 0.0 || signal.values.empty())
        throw DomainError("synchronous_detect: signal must be non-empty with positive dt");
    if (rotation_hz <= 0.0 || harmonic < 1)
        throw DomainError("synchronous_detect: rotation frequency positive, harmonic >= 1");

    const double target_hz = harmonic * rotation_hz;
    const double period = 1.0 / target_hz;
    if (signal.duration() + 0.5 * signal.dt < integration_time_s)
        throw InsufficientDataError("synchronous_detect: record shorter than integration time");
    const auto whole_periods = static_cast<long long>(std::floor(integration_time_s * target_hz));
    if (whole_periods < 10)
        throw InsufficientDataError(
            "synchronous_detect: integration time covers fewer than 10 target periods");

    auto window = static_cast<std::size_t>(std::llround(whole_periods * period / signal.dt));
    window = std::min(window, signal.values.size());

    const double omega = kTwoPi * target_hz;
    double in_phase = 0.0, quadrature = 0.0;
    for (std::size_t k = 0; k < window; ++k) {
        const double t = static_cast<double>(k) * signal.dt;
        in_phase += signal.values[k] * std::sin(omega * t);
        quadrature += signal.values[k] * std::cos(omega * t);
    }
    in_phase *= 2.0 / static_cast<double>(window);
    quadrature *= 2.0 / static_cast<double>(window);

    double residual_sq = 0.0;
    for (std::size_t k = 0; k < window; ++k) {
        const double t = static_cast<double>(k) * signal.dt;
        const double fit = in_phase * std::sin(omega * t) + quadrature * std::cos(omega * t);
        const double r = signal.values[k] - fit;
        residual_sq += r * r;
    }
    const double residual_rms = std::sqrt(residual_sq / static_cast<double>(window));

    return {harmonic, std::hypot(in_phase, quadrature), std::atan2(quadrature, in_phase),
            residual_rms * std::sqrt(2.0 / static_cast<double>(window))};
}

double assembly_differential_accel(const SourceAssembly& assembly, double span_m,
                                   double phase_angle) {
    if (!(span_m > 0.0)) throw DomainError("assembly_differential_accel: span must be positive");
    const Vec3 left{-0.5 * span_m, 0.0, 0.0};
    const Vec3 right{0.5 * span_m, 0.0, 0.0};
    const double ax_left = source_field(assembly, phase_angle, left)[0];
    const double ax_right = source_field(assembly, phase_angle, right)[0];
    return ax_left - ax_right; // positive when the field squeezes the pair
}

double predicted_charge_signal(const SourceAssembly& assembly, const ScenarioConfig& circuit,
                               double t) {
    const PhysicalConstants& c = constants();
    const double earth_drive = c.surface_gravity * circuit.cube_edge_m / c.earth_radius;
    const double phase = kTwoPi * assembly.rotation_hz * t;
    const double drive =
        earth_drive + assembly_differential_accel(assembly, circuit.cube_edge_m, phase);
    return charge_for_drive(circuit, drive);
}

double predicted_charge_signal(const ScenarioConfig& circuit) {
    const PhysicalConstants& c = constants();
    return charge_for_drive(circuit, c.surface_gravity * circuit.cube_edge_m / c.earth_radius);
}

PendulumResponse pendulum_response(const SourceAssembly& assembly, double span_m,
                                   double duration_s, double dt_s) {
    if (!(dt_s > 0.0) || duration_s < dt_s)
        throw DomainError("pendulum_response: need duration >= dt > 0");
    PendulumResponse response;
    response.static_gain = 1.0 / constants().surface_gravity;
    const auto samples = static_cast<std::size_t>(std::floor(duration_s / dt_s + 1e-9));
    response.time.reserve(samples);
    response.deflection_rad.reserve(samples);
    const Vec3 bob{0.5 * span_m, 0.0, 0.0};
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = static_cast<double>(k) * dt_s;
        const double phase = kTwoPi * assembly.rotation_hz * t;
        const double ax = source_field(assembly, phase, bob)[0];
        const double deflection = pendulum_deflection(ax);
        if (std::abs(deflection) >= 1e-3)
            throw DomainError("pendulum_response: deflection outside the small-angle regime");
        response.time.push_back(t);
        response.deflection_rad.push_back(deflection);
    }
    return response;
}

std::string_view outcome_label(Outcome outcome) {
    switch (outcome) {
        case Outcome::I: return "I";
        case Outcome::II: return "II";
        case Outcome::III: return "III";
        case Outcome::IV: return "IV";
    }
    return "?";
}

OutcomeRecord classify_outcome(bool charge_detected, bool deflection_detected) {
    Outcome outcome = Outcome::IV;
    if (charge_detected && !deflection_detected) outcome = Outcome::I;
    else if (!charge_detected && deflection_detected) outcome = Outcome::II;
    else if (charge_detected && deflection_detected) outcome = Outcome::III;
    return {charge_detected, deflection_detected, outcome};
}

} // namespace qtide::cavendish
