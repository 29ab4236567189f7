#include "qtide/freefall.hpp"

#include <cmath>

#include "qtide/constants.hpp"

namespace qtide::freefall {

namespace {

void validate(const FallScenario& s) {
    if (!(s.step_s > 0.0)) throw DomainError("fall scenario: step must be positive");
    if (s.duration_s < s.step_s) throw DomainError("fall scenario: duration must be >= step");
    if (s.separation_m < 0.0) throw DomainError("fall scenario: separation must be nonnegative");
    if (s.drop_height_m < 0.0) throw DomainError("fall scenario: drop height must be nonnegative");
}

double incline_from_vertical(const Vec3& velocity) {
    const double horizontal = std::hypot(velocity[0], velocity[1]);
    const double vertical = std::abs(velocity[2]);
    if (horizontal == 0.0 && vertical == 0.0) return 0.0;
    return std::atan2(horizontal, vertical);
}

// State of one falling point in the x-z plane. The vertical coordinate
// is carried as an offset from the release altitude so that integration
// rounding is not anchored to the Earth-radius scale.
struct PointState {
    double x;
    double dz; // z - z_release
    double vx;
    double vz;
};

struct Accel {
    double ax;
    double az;
};

Accel central_accel(double x, double z, double gm) {
    const double r = std::hypot(x, z);
    const double factor = -gm / (r * r * r);
    return {factor * x, factor * z};
}

void rk4_step(PointState& s, double h, double gm, double z_release) {
    auto accel = [gm, z_release](const PointState& p) {
        return central_accel(p.x, z_release + p.dz, gm);
    };
    const PointState s1 = s;
    const Accel a1 = accel(s1);
    const PointState s2{s.x + 0.5 * h * s1.vx, s.dz + 0.5 * h * s1.vz,
                        s.vx + 0.5 * h * a1.ax, s.vz + 0.5 * h * a1.az};
    const Accel a2 = accel(s2);
    const PointState s3{s.x + 0.5 * h * s2.vx, s.dz + 0.5 * h * s2.vz,
                        s.vx + 0.5 * h * a2.ax, s.vz + 0.5 * h * a2.az};
    const Accel a3 = accel(s3);
    const PointState s4{s.x + h * s3.vx, s.dz + h * s3.vz, s.vx + h * a3.ax, s.vz + h * a3.az};
    const Accel a4 = accel(s4);
    s.x += h / 6.0 * (s1.vx + 2.0 * s2.vx + 2.0 * s3.vx + s4.vx);
    s.dz += h / 6.0 * (s1.vz + 2.0 * s2.vz + 2.0 * s3.vz + s4.vz);
    s.vx += h / 6.0 * (a1.ax + 2.0 * a2.ax + 2.0 * a3.ax + a4.ax);
    s.vz += h / 6.0 * (a1.az + 2.0 * a2.az + 2.0 * a3.az + a4.az);
}

// Rigid pair: only the shared vertical coordinate evolves; the lever
// arm x stays fixed at +-x0.
void rk4_step_rigid(double x0, double& dz, double& vz, double h, double gm, double z_release) {
    auto accel = [x0, gm, z_release](double offset) {
        return central_accel(x0, z_release + offset, gm).az;
    };
    const double k1z = vz, k1v = accel(dz);
    const double k2z = vz + 0.5 * h * k1v, k2v = accel(dz + 0.5 * h * k1z);
    const double k3z = vz + 0.5 * h * k2v, k3v = accel(dz + 0.5 * h * k2z);
    const double k4z = vz + h * k3v, k4v = accel(dz + h * k3z);
    dz += h / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
    vz += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
}

} // namespace

double TrajectoryPair::separation(std::size_t i) const {
    return norm(position1[i] - position2[i]);
}

double TrajectoryPair::convergence_angle_observed() const {
    if (time.empty()) return 0.0;
    return incline_from_vertical(velocity1.back()) + incline_from_vertical(velocity2.back());
}

ConvergenceAngle convergence_angle(double separation_m) {
    if (separation_m < 0.0) throw DomainError("convergence_angle: separation must be nonnegative");
    const double ratio = separation_m / constants().earth_radius;
    return {ratio, ratio <= 1e-2};
}

double horizontal_accel(double offset_m) {
    const PhysicalConstants& c = constants();
    if (std::abs(offset_m) > 1e-2 * c.earth_radius)
        throw DomainError("horizontal_accel: offset too large for the linearized field");
    return c.surface_gravity * offset_m / c.earth_radius;
}

TrajectoryPair simulate_pair(const FallScenario& scenario) {
    validate(scenario);
    const PhysicalConstants& c = constants();
    const double gm = c.earth_gm();
    const double x0 = 0.5 * scenario.separation_m;
    const double z_release = c.earth_radius + scenario.drop_height_m;
    const double h = scenario.step_s;
    const auto steps = static_cast<std::size_t>(std::floor(scenario.duration_s / h + 1e-9));

    TrajectoryPair out;
    out.time.reserve(steps + 1);

    if (scenario.mode == FallMode::independent_points) {
        PointState left{-x0, 0.0, 0.0, 0.0};
        PointState right{x0, 0.0, 0.0, 0.0};
        for (std::size_t i = 0; i <= steps; ++i) {
            out.time.push_back(static_cast<double>(i) * h);
            out.position1.push_back({left.x, 0.0, z_release + left.dz});
            out.position2.push_back({right.x, 0.0, z_release + right.dz});
            out.velocity1.push_back({left.vx, 0.0, left.vz});
            out.velocity2.push_back({right.vx, 0.0, right.vz});
            if (i == steps) break;
            rk4_step(left, h, gm, z_release);
            rk4_step(right, h, gm, z_release);
            if (std::hypot(left.x, z_release + left.dz) < c.earth_radius ||
                std::hypot(right.x, z_release + right.dz) < c.earth_radius)
                throw SurfaceImpactError("trajectory reached the surface during integration",
                                         std::move(out));
        }
    } else {
        double dz = 0.0, vz = 0.0;
        for (std::size_t i = 0; i <= steps; ++i) {
            const double z = z_release + dz;
            const double r = std::hypot(x0, z);
            out.time.push_back(static_cast<double>(i) * h);
            out.position1.push_back({-x0, 0.0, z});
            out.position2.push_back({x0, 0.0, z});
            out.velocity1.push_back({0.0, 0.0, vz});
            out.velocity2.push_back({0.0, 0.0, vz});
            // Horizontal pull the rigid body resists, per unit mass.
            out.constraint_accel.push_back(gm * x0 / (r * r * r));
            if (i == steps) break;
            rk4_step_rigid(x0, dz, vz, h, gm, z_release);
            if (std::hypot(x0, z_release + dz) < c.earth_radius)
                throw SurfaceImpactError("trajectory reached the surface during integration",
                                         std::move(out));
        }
    }
    return out;
}

} // namespace qtide::freefall
