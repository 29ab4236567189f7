#pragma once

#include "qtide/numerics.hpp"
#include "qtide/rydberg.hpp"

namespace qtide::gravito {

using rydberg::CircularState;
using rydberg::MomentModel;

/// Earth parameters entering the tidal velocity field g t r / R_E.
/// Consistency of g with GM/R^2 (0.5%) is enforced on construction.
struct TidalFieldModel {
    double surface_gravity;
    double earth_radius;
    double earth_gm;

    TidalFieldModel(double g, double radius, double gm);
    static TidalFieldModel earth();

    /// Newtonian g at radial coordinate r.
    double gravity_at(double r) const { return earth_gm / (r * r); }
};

/// Velocity field of freely falling test particles at horizontal offset
/// (x, y) a time t after release: (g t / R_E) (x, y, 0), m/s.
/// Offsets beyond 1e-3 R_E are outside the linearized regime.
Vec3 tidal_field(double x, double y, double t, const TidalFieldModel& model);

/// First-order diamagnetic shift (e^2 B^2 / 8m) <x^2+y^2>, J.
double diamagnetic_shift(const CircularState& state, double field_tesla,
                         MomentModel model = MomentModel::exact);

/// Force -(e^2 <x^2+y^2> / 8m) grad(B^2), N: the atom seeks low field.
Vec3 magnetic_force(const CircularState& state, const Vec3& grad_b_squared,
                    MomentModel model = MomentModel::exact);

/// First-order tidal shift (m/2) <x^2+y^2> (g t / R_E)^2, J, with the
/// model's measured surface gravity. Quadratic in the time since
/// release.
double gravitational_shift(const CircularState& state, double t, const TidalFieldModel& model,
                           MomentModel moment = MomentModel::exact);

/// Altitude-dependent form (m/2) <x^2+y^2> t^2 (GM)^2 / r^6, with the
/// Newtonian g(r) = GM/r^2 replacing the measured surface value (the
/// two differ by the model's g-vs-GM/R^2 consistency margin at r = R_E).
/// This is the field whose radial gradient gives gravitational_force.
double gravitational_shift_at_radius(const CircularState& state, double t, double r,
                                     const TidalFieldModel& model,
                                     MomentModel moment = MomentModel::exact);

/// Minus the radial gradient of the altitude-dependent shift:
/// +3 m <x^2+y^2> t^2 (GM)^2 / r^7 directed radially outward (+z), N.
/// The extended atom is pushed up: it falls more slowly than a point.
Vec3 gravitational_force(const CircularState& state, double t, double r,
                         const TidalFieldModel& model,
                         MomentModel moment = MomentModel::exact);

/// Shift and force evaluated together at one instant.
struct PerturbationResult {
    double energy_shift;   ///< J
    Vec3 force;            ///< N
    double time_evaluated; ///< s
};

PerturbationResult gravitational_perturbation(const CircularState& state, double t, double r,
                                              const TidalFieldModel& model,
                                              MomentModel moment = MomentModel::exact);

} // namespace qtide::gravito
