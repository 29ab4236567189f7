#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qtide/config.hpp"
#include "qtide/errors.hpp"
#include "qtide/numerics.hpp"

namespace qtide::cavendish {

/// Brick piles on a rotating platform, modeled as point masses at their
/// centroids, equally spaced on a circle of orbit_radius. Two piles sit
/// diametrically opposite by default.
struct SourceAssembly {
    double pile_mass_kg = 500.0;
    double orbit_radius_m = 0.5;
    double rotation_hz = 0.01;
    int pile_count = 2;

    void validate() const;
};

/// Newtonian field of the rotated piles at eval_point (offset from the
/// platform center), m/s^2. phase_angle is the platform rotation angle.
/// eval_point must lie strictly inside the orbit; a point on a source
/// raises SingularityError.
Vec3 source_field(const SourceAssembly& assembly, double phase_angle, const Vec3& eval_point);

/// Static plumb-bob response: tilt = horizontal_accel / g, rad.
/// Fields of 1e-2 g or more violate the small-angle model.
double pendulum_deflection(double horizontal_accel);

/// Uniformly sampled record.
struct TimeSeries {
    double dt = 1.0;
    std::vector<double> values;

    double duration() const { return dt * static_cast<double>(values.size()); }
};

/// Adds seeded Gaussian noise of the given rms to a copy of the series.
TimeSeries add_noise(const TimeSeries& series, double rms, std::uint64_t seed);

struct DetectionResult {
    int harmonic;
    double amplitude;
    double phase_rad;
    double noise_floor; ///< statistical amplitude floor of the residual
};

/// In-phase/quadrature projection at harmonic * rotation_hz over the
/// longest whole number of target periods inside integration_time
/// (whole periods keep the projection exact for on-bin tones). The
/// record must cover integration_time, and integration_time must cover
/// at least 10 target periods; otherwise InsufficientDataError.
DetectionResult synchronous_detect(const TimeSeries& signal, double rotation_hz, int harmonic,
                                   double integration_time_s);

/// Converging-positive differential acceleration of the assembly field
/// across a horizontal span centered on the platform axis, m/s^2.
/// Defined so that for the Earth's own tidal field the same quantity
/// would be g * span / R_E.
double assembly_differential_accel(const SourceAssembly& assembly, double span_m,
                                   double phase_angle);

/// Charge held on the cubes when the dumbbell Coulomb repulsion
/// balances the total converging drive (Earth tide plus assembly), C.
/// Negative values mean the drive has reversed sign and the charge
/// layout is inverted. Periodic at twice the rotation frequency for the
/// symmetric 2-pile assembly.
double predicted_charge_signal(const SourceAssembly& assembly, const ScenarioConfig& circuit,
                               double t);

/// Earth-only static value of the same composition (no assembly).
double predicted_charge_signal(const ScenarioConfig& circuit);

/// Deflection record of the plumb bob at (+span/2, 0, 0), rad.
struct PendulumResponse {
    std::vector<double> time;
    std::vector<double> deflection_rad;
    double static_gain; ///< rad per m/s^2, i.e. 1/g
};

PendulumResponse pendulum_response(const SourceAssembly& assembly, double span_m,
                                   double duration_s, double dt_s);

enum class Outcome { I, II, III, IV };

std::string_view outcome_label(Outcome outcome);

/// Truth table over the two observables:
///   (charge yes, deflection no)  -> I
///   (charge no,  deflection yes) -> II
///   (charge yes, deflection yes) -> III
///   (charge no,  deflection no)  -> IV
struct OutcomeRecord {
    bool charge_separation_detected;
    bool deflection_detected;
    Outcome classification;
};

OutcomeRecord classify_outcome(bool charge_detected, bool deflection_detected);

} // namespace qtide::cavendish
