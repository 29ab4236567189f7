#include "qtide/perturbation.hpp"

#include <cmath>

#include "qtide/constants.hpp"

namespace qtide::gravito {

TidalFieldModel::TidalFieldModel(double g, double radius, double gm)
    : surface_gravity(g), earth_radius(radius), earth_gm(gm) {
    if (!(g > 0.0) || !(radius > 0.0) || !(gm > 0.0))
        throw ValidationError("tidal field model parameters must be positive");
    const double newtonian = gm / (radius * radius);
    if (std::abs(newtonian - g) / g > 5e-3)
        throw ValidationError("tidal field model: g and GM/R^2 disagree by more than 0.5%");
}

TidalFieldModel TidalFieldModel::earth() {
    const PhysicalConstants& c = constants();
    return TidalFieldModel(c.surface_gravity, c.earth_radius, c.earth_gm());
}

Vec3 tidal_field(double x, double y, double t, const TidalFieldModel& model) {
    const double limit = 1e-3 * model.earth_radius;
    if (std::abs(x) > limit || std::abs(y) > limit)
        throw DomainError("tidal_field: horizontal offset too large for the linearized field");
    if (t < 0.0) throw DomainError("tidal_field: time since release must be nonnegative");
    const double scale = model.surface_gravity * t / model.earth_radius;
    return {scale * x, scale * y, 0.0};
}

double diamagnetic_shift(const CircularState& state, double field_tesla, MomentModel model) {
    if (field_tesla < 0.0) throw DomainError("diamagnetic_shift: field must be nonnegative");
    const PhysicalConstants& c = constants();
    const double moment = rydberg::transverse_moment(state, model);
    return c.electron_charge * c.electron_charge * field_tesla * field_tesla * moment /
           (8.0 * c.electron_mass);
}

Vec3 magnetic_force(const CircularState& state, const Vec3& grad_b_squared, MomentModel model) {
    const PhysicalConstants& c = constants();
    const double prefactor = -c.electron_charge * c.electron_charge *
                             rydberg::transverse_moment(state, model) / (8.0 * c.electron_mass);
    return prefactor * grad_b_squared;
}

double gravitational_shift(const CircularState& state, double t, const TidalFieldModel& model,
                           MomentModel moment) {
    if (t < 0.0) throw DomainError("gravitational shift: time must be nonnegative");
    const double mass = constants().electron_mass;
    const double rate = model.surface_gravity * t / model.earth_radius;
    return 0.5 * mass * rydberg::transverse_moment(state, moment) * rate * rate;
}

double gravitational_shift_at_radius(const CircularState& state, double t, double r,
                                     const TidalFieldModel& model, MomentModel moment) {
    if (t < 0.0) throw DomainError("gravitational shift: time must be nonnegative");
    if (!(r > 0.0)) throw DomainError("gravitational shift: radius must be positive");
    const double mass = constants().electron_mass;
    // h = g(r) t (x, y)/r with g(r) = GM/r^2, so the quadratic coupling
    // carries (GM t / r^3)^2.
    const double rate = model.earth_gm * t / (r * r * r);
    return 0.5 * mass * rydberg::transverse_moment(state, moment) * rate * rate;
}

Vec3 gravitational_force(const CircularState& state, double t, double r,
                         const TidalFieldModel& model, MomentModel moment) {
    if (t < 0.0) throw DomainError("gravitational force: time must be nonnegative");
    if (r < model.earth_radius)
        throw DomainError("gravitational force: radius must be at or above the surface");
    const double mass = constants().electron_mass;
    const double gm = model.earth_gm;
    const double r7 = r * r * r * r * r * r * r;
    const double up = 3.0 * mass * rydberg::transverse_moment(state, moment) * t * t * gm * gm / r7;
    return {0.0, 0.0, up};
}

PerturbationResult gravitational_perturbation(const CircularState& state, double t, double r,
                                              const TidalFieldModel& model, MomentModel moment) {
    return {gravitational_shift_at_radius(state, t, r, model, moment),
            gravitational_force(state, t, r, model, moment), t};
}

} // namespace qtide::gravito
