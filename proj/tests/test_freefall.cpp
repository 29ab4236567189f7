#include <doctest.h>

#include "approx.hpp"

#include <cmath>

#include "qtide/constants.hpp"
#include "qtide/freefall.hpp"

using namespace qtide;
using namespace qtide::freefall;

namespace {

double specific_energy(const Vec3& position, const Vec3& velocity) {
    return 0.5 * dot(velocity, velocity) - constants().earth_gm() / norm(position);
}

double separation_shrinkage(const TrajectoryPair& pair) {
    return pair.separation(0) - pair.separation(pair.size() - 1);
}

} // namespace

TEST_CASE("convergence angle is L/R_E with a small-angle flag") {
    CHECK(convergence_angle(0.0).radians == 0.0);
    auto cm = convergence_angle(0.01);
    CHECK(cm.radians == rel(1.569612305760477e-9, 1e-12));
    CHECK(cm.small_angle_valid);
    auto huge = convergence_angle(constants().earth_radius);
    CHECK(huge.radians == doctest::Approx(1.0));
    CHECK_FALSE(huge.small_angle_valid);
    CHECK_THROWS_AS(convergence_angle(-1.0), DomainError);
}

TEST_CASE("horizontal acceleration is g offset / R_E") {
    CHECK(horizontal_accel(0.0) == 0.0);
    CHECK(horizontal_accel(1.0) == rel(1.539263851828598e-6, 1e-12));
    CHECK(horizontal_accel(0.01) == rel(1.539263851828598e-8, 1e-12));
    CHECK(horizontal_accel(-1.0) == -horizontal_accel(1.0));
    CHECK_THROWS_AS(horizontal_accel(1e5), DomainError);
}

TEST_CASE("independent points converge by the small-angle prediction") {
    FallScenario scenario; // L = 1 m, 100 m height, 1 s, 1 ms steps
    TrajectoryPair pair = simulate_pair(scenario);
    REQUIRE(pair.size() == 1001);
    CHECK(pair.time[1] - pair.time[0] == rel(1e-3, 1e-12));

    // closed-form small-angle prediction for the integrated central
    // field: per-point pull (GM/r0^3)(L/2), shrinkage GM L t^2/(2 r0^3)
    const double r0 = constants().earth_radius + scenario.drop_height_m;
    const double predicted = constants().earth_gm() * scenario.separation_m / (2.0 * r0 * r0 * r0);
    const double shrinkage = separation_shrinkage(pair);
    CHECK(std::abs(shrinkage - predicted) / predicted < 1e-3);

    // each trajectory tilts by L/(2 R_E); the pair closes by L/R_E
    const double half_angle = scenario.separation_m / (2.0 * constants().earth_radius);
    const double incline1 = std::atan2(std::abs(pair.velocity1.back()[0]),
                                       std::abs(pair.velocity1.back()[2]));
    CHECK(std::abs(incline1 - half_angle) / half_angle < 0.01);
    const double observed = pair.convergence_angle_observed();
    const double expected = convergence_angle(scenario.separation_m).radians;
    CHECK(std::abs(observed - expected) / expected < 0.01);
}

TEST_CASE("energy is conserved to 1e-9 relative") {
    FallScenario scenario;
    TrajectoryPair pair = simulate_pair(scenario);
    const double e1_start = specific_energy(pair.position1.front(), pair.velocity1.front());
    const double e2_start = specific_energy(pair.position2.front(), pair.velocity2.front());
    for (std::size_t i = 0; i < pair.size(); i += 50) {
        CHECK(std::abs(specific_energy(pair.position1[i], pair.velocity1[i]) - e1_start) /
                  std::abs(e1_start) < 1e-9);
        CHECK(std::abs(specific_energy(pair.position2[i], pair.velocity2[i]) - e2_start) /
                  std::abs(e2_start) < 1e-9);
    }
}

TEST_CASE("halving the step barely moves the answer (4th order)") {
    FallScenario coarse;
    FallScenario fine = coarse;
    fine.step_s = 0.5e-3;
    TrajectoryPair a = simulate_pair(coarse);
    TrajectoryPair b = simulate_pair(fine);

    const double shrink_a = separation_shrinkage(a);
    const double shrink_b = separation_shrinkage(b);
    // a tenth of the 1e-3 relative acceptance window
    CHECK(std::abs(shrink_a - shrink_b) < 0.1 * 1e-3 * shrink_a);
    CHECK(std::abs(a.position1.back()[2] - b.position1.back()[2]) < 1e-10);
}

TEST_CASE("zero separation degenerates to identical trajectories") {
    FallScenario scenario;
    scenario.separation_m = 0.0;
    TrajectoryPair pair = simulate_pair(scenario);
    for (std::size_t i = 0; i < pair.size(); i += 100) {
        CHECK(pair.position1[i] == pair.position2[i]);
        CHECK(pair.separation(i) == 0.0);
    }
}

TEST_CASE("mirror symmetry holds to machine level") {
    FallScenario scenario;
    TrajectoryPair pair = simulate_pair(scenario);
    for (std::size_t i = 0; i < pair.size(); i += 100) {
        CHECK(pair.position1[i][0] == -pair.position2[i][0]); // exact negation
        CHECK(pair.position1[i][2] == pair.position2[i][2]);
        CHECK(pair.velocity1[i][0] == -pair.velocity2[i][0]);
    }
}

TEST_CASE("rigid mode pins the separation and reports the resisted pull") {
    FallScenario scenario;
    scenario.mode = FallMode::rigid_extended;
    TrajectoryPair pair = simulate_pair(scenario);
    REQUIRE(pair.constraint_accel.size() == pair.size());

    for (std::size_t i = 0; i < pair.size(); i += 100)
        CHECK(pair.separation(i) == scenario.separation_m); // exact

    const double x0 = 0.5 * scenario.separation_m;
    const double r0 = std::hypot(x0, constants().earth_radius + scenario.drop_height_m);
    const double exact = constants().earth_gm() * x0 / (r0 * r0 * r0);
    CHECK(pair.constraint_accel.front() == rel(exact, 1e-12));
    // and it sits at the surface tidal scale g (L/2) / R_E
    const double surface_scale = constants().surface_gravity * x0 / constants().earth_radius;
    CHECK(std::abs(pair.constraint_accel.front() - surface_scale) / surface_scale < 2e-3);
    // the pull grows as the pair falls deeper
    CHECK(pair.constraint_accel.back() > pair.constraint_accel.front());
}

TEST_CASE("surface impact truncates with the partial series attached") {
    FallScenario scenario;
    scenario.drop_height_m = 0.5;
    scenario.duration_s = 1.0;
    try {
        simulate_pair(scenario);
        FAIL("expected SurfaceImpactError");
    } catch (const SurfaceImpactError& impact) {
        CHECK(impact.partial_trajectory.size() > 100);
        CHECK(impact.partial_trajectory.size() < 1001);
    }
}

TEST_CASE("scenario validation") {
    FallScenario bad;
    bad.step_s = 0.0;
    CHECK_THROWS_AS(simulate_pair(bad), DomainError);
    bad = FallScenario{};
    bad.duration_s = 1e-6;
    CHECK_THROWS_AS(simulate_pair(bad), DomainError);
    bad = FallScenario{};
    bad.separation_m = -1.0;
    CHECK_THROWS_AS(simulate_pair(bad), DomainError);
    bad = FallScenario{};
    bad.drop_height_m = -1.0;
    CHECK_THROWS_AS(simulate_pair(bad), DomainError);
}
