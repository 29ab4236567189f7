#pragma once

#include <cstddef>
#include <vector>

#include "qtide/errors.hpp"
#include "qtide/numerics.hpp"

namespace qtide::freefall {

/// independent_points: the two objects fall freely and converge.
/// rigid_extended: the pair is a single rigid object; the horizontal
/// separation stays fixed and the resisted tidal pull is reported.
enum class FallMode { independent_points, rigid_extended };

struct FallScenario {
    double separation_m = 1.0;
    double drop_height_m = 100.0;
    double duration_s = 1.0;
    double step_s = 1e-3;
    FallMode mode = FallMode::independent_points;
};

struct TrajectoryPair {
    std::vector<double> time;
    std::vector<Vec3> position1;
    std::vector<Vec3> position2;
    std::vector<Vec3> velocity1;
    std::vector<Vec3> velocity2;
    /// rigid_extended only: horizontal tidal pull per unit mass that the
    /// rigidity cancels at each sample, m/s^2. Empty otherwise.
    std::vector<double> constraint_accel;

    std::size_t size() const { return time.size(); }
    double separation(std::size_t i) const;
    /// Sum of the two trajectories' inclinations from the vertical,
    /// taken from the final velocities, rad.
    double convergence_angle_observed() const;
};

/// Integration ended early because a point reached the surface.
/// Carries the series integrated so far.
class SurfaceImpactError : public std::runtime_error {
public:
    SurfaceImpactError(std::string message, TrajectoryPair partial)
        : std::runtime_error(std::move(message)), partial_trajectory(std::move(partial)) {}
    TrajectoryPair partial_trajectory;
};

struct ConvergenceAngle {
    double radians;
    /// Cleared when L/R_E > 1e-2, where the small-angle reading fails.
    bool small_angle_valid;
};

/// theta = L / R_E between two plumb lines separated by L.
ConvergenceAngle convergence_angle(double separation_m);

/// Horizontal component g * offset / R_E of the free-fall acceleration
/// at a horizontal offset from the reference vertical, directed back
/// toward it, m/s^2. Offsets beyond 1e-2 R_E are rejected.
double horizontal_accel(double offset_m);

/// Integrates both points in the Earth's central field with a fixed-step
/// classic 4th-order Runge-Kutta scheme. Deterministic: no adaptivity.
TrajectoryPair simulate_pair(const FallScenario& scenario);

} // namespace qtide::freefall
