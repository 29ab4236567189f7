#include <doctest.h>

#include "approx.hpp"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qtide/constants.hpp"
#include "qtide/electrostatics.hpp"

using namespace qtide;
using namespace qtide::electrostatics;

namespace {

// Independent float-summation oracle for the axial force on `group`.
// Terms are formed in long double so the comparison is limited by the
// summation, not by per-term rounding.
double float_force(const std::vector<PointCharge>& config,
                   const std::vector<std::size_t>& group) {
    long double sum = 0.0L;
    for (std::size_t i : group) {
        for (std::size_t j = 0; j < config.size(); ++j) {
            if (std::find(group.begin(), group.end(), j) != group.end()) continue;
            const long double d =
                (config[i].position - config[j].position).convert_to<long double>();
            const long double q = config[i].charge.convert_to<long double>() *
                                  config[j].charge.convert_to<long double>();
            sum += (d > 0 ? 1.0L : -1.0L) * q / (d * d);
        }
    }
    return static_cast<double>(sum);
}

double magnitude_sum(const std::vector<PointCharge>& config,
                     const std::vector<std::size_t>& group) {
    double sum = 0.0;
    for (std::size_t i : group) {
        for (std::size_t j = 0; j < config.size(); ++j) {
            if (std::find(group.begin(), group.end(), j) != group.end()) continue;
            const double d = static_cast<double>(config[i].position - config[j].position);
            sum += std::abs(static_cast<double>(config[i].charge) *
                            static_cast<double>(config[j].charge)) / (d * d);
        }
    }
    return sum;
}

} // namespace

TEST_CASE("two like charges a rod apart repel with unit force") {
    std::vector<PointCharge> pair{{Rational(1), Rational(0)}, {Rational(1), Rational(1)}};
    CHECK(coulomb_force(pair, {1}) == Rational(1));
    CHECK(coulomb_force(pair, {0}) == Rational(-1));
}

TEST_CASE("alpha is exactly 11/18") {
    CHECK(alpha_constant() == Rational(11, 18));

    // term-by-term: the innermost (+Q, +Q) pair dominates the rest
    DumbbellPair pair = DumbbellPair::canonical();
    const Rational innermost =
        coulomb_force({pair.charges[1], pair.charges[2]}, {1}); // +Q at L and +Q at 2L
    CHECK(innermost == Rational(1));
    const Rational others = alpha_constant() - innermost;
    CHECK(abs(others) == Rational(7, 18));
    CHECK(innermost > abs(others)); // net force is repulsive

    // float-summation oracle
    const double as_double = static_cast<double>(alpha_constant());
    CHECK(std::abs(as_double - float_force(DumbbellPair::canonical().charges, {2, 3})) <
          1e-15 * as_double);
}

TEST_CASE("rescaling the rod leaves the dimensionless coefficient unchanged") {
    // same layout measured in half-rods: positions doubled, force in the
    // new position unit is 11/18 divided by the squared rod length
    std::vector<PointCharge> rescaled{{Rational(-1), Rational(0)},
                                      {Rational(1), Rational(2)},
                                      {Rational(1), Rational(4)},
                                      {Rational(-1), Rational(6)}};
    CHECK(coulomb_force(rescaled, {2, 3}) * Rational(4) == Rational(11, 18));
}

TEST_CASE("coincident charges raise SingularityError") {
    std::vector<PointCharge> bad{{Rational(1), Rational(0)}, {Rational(-1), Rational(0)}};
    CHECK_THROWS_AS(coulomb_force(bad, {0}), SingularityError);
    CHECK_THROWS_AS(coulomb_force({{Rational(1), Rational(0)}}, {}), DomainError);
}

TEST_CASE("action equals reaction exactly on random rational configs") {
    std::mt19937 rng(1811);
    std::uniform_int_distribution<int> numerator(-60, 60);
    std::uniform_int_distribution<int> denominator(1, 12);
    std::uniform_int_distribution<int> charge_num(-3, 3);

    for (int trial = 0; trial < 60; ++trial) {
        std::vector<PointCharge> config;
        while (config.size() < 6) {
            Rational pos(numerator(rng), denominator(rng));
            bool duplicate = false;
            for (const auto& c : config) duplicate |= (c.position == pos);
            int q = charge_num(rng);
            if (q == 0 || duplicate) continue;
            config.push_back({Rational(q, denominator(rng)), pos});
        }
        std::vector<std::size_t> group{0, 2, 4};
        std::vector<std::size_t> complement{1, 3, 5};
        const Rational on_group = coulomb_force(config, group);
        const Rational on_complement = coulomb_force(config, complement);
        CHECK(on_group == -on_complement); // exact rational equality

        // exact value vs compensated float summation
        const double exact = static_cast<double>(on_group);
        const double scale = magnitude_sum(config, group);
        if (std::abs(exact) > 1e-3 * scale)
            CHECK(std::abs(exact - float_force(config, group)) <= 1e-15 * std::abs(exact));
    }
}

TEST_CASE("dumbbell voltages: all four conventions, none gives -2/3") {
    DumbbellPair pair = DumbbellPair::canonical();
    CHECK(dumbbell_voltage(pair, VoltageConvention::all_other_charges).value == Rational(-5, 3));
    CHECK(dumbbell_voltage(pair, VoltageConvention::other_dumbbell_only).value == Rational(1, 3));
    CHECK(dumbbell_voltage(pair, VoltageConvention::partner_only).value == Rational(-2));
    CHECK(dumbbell_voltage(pair, VoltageConvention::midpoint_nearest_charge).value ==
          Rational(1, 2));

    const Rational nominal(-2, 3);
    for (const auto& candidate : dumbbell_voltage_candidates(pair)) {
        CHECK(candidate.value != nominal);
        CHECK(!convention_name(candidate.convention).empty());
    }
}

TEST_CASE("dumbbell pair validation") {
    CHECK_NOTHROW(DumbbellPair::canonical());
    // broken neutrality
    CHECK_THROWS_AS(DumbbellPair::from_charges({{Rational(1), Rational(0)},
                                                {Rational(1), Rational(1)},
                                                {Rational(1), Rational(2)},
                                                {Rational(-1), Rational(3)}}),
                    DomainError);
    // broken mirror layout
    CHECK_THROWS_AS(DumbbellPair::from_charges({{Rational(-1), Rational(0)},
                                                {Rational(1), Rational(1)},
                                                {Rational(-1), Rational(2)},
                                                {Rational(1), Rational(3)}}),
                    DomainError);
}

TEST_CASE("tidal force on a cube is rho g L^4 / R_E") {
    CHECK(tidal_force_on_cube(1e4, 0.01) ==
          rel(1.539263851828598e-10, 1e-12));
    CHECK(tidal_force_on_cube(1e4, 0.02) / tidal_force_on_cube(1e4, 0.01) ==
          rel(16.0, 1e-15));
    // vanishing cube: force scales away as L^4
    CHECK(tidal_force_on_cube(1e4, 1e-6) < 1e-22);
    CHECK_THROWS_AS(tidal_force_on_cube(1e4, 0.0), DomainError);
    CHECK_THROWS_AS(tidal_force_on_cube(-1.0, 0.01), DomainError);
}

TEST_CASE("equilibrium solve reproduces the reference picocoulomb/volt scales") {
    EquilibriumResult eq = equilibrium_solve(1e4, 0.01);
    CHECK(eq.charge_coulomb == rel(1.674078204471395e-12, 1e-12));
    CHECK(eq.charge_coulomb > 0.5e-12);
    CHECK(eq.charge_coulomb < 5e-12);
    CHECK(eq.voltage_volt == rel(1.003057637798817, 1e-12));
    CHECK(eq.voltage_sign == -1);
    CHECK(eq.residual <= 1e-12);
    CHECK(eq.alpha == Rational(11, 18));
    CHECK(eq.beta == Rational(-2, 3));
    CHECK(eq.tidal_force_newton == rel(1.539263851828598e-10, 1e-12));

    EquilibriumResult positive_beta = equilibrium_solve(1e4, 0.01, Rational(11, 18), Rational(2, 3));
    CHECK(positive_beta.voltage_sign == 1);
    CHECK(positive_beta.voltage_volt == eq.voltage_volt);
}

TEST_CASE("zero gravity gives zero charge and voltage") {
    EquilibriumResult eq = equilibrium_solve(1e4, 0.01, Rational(11, 18), Rational(-2, 3), 0.0);
    CHECK(eq.charge_coulomb == 0.0);
    CHECK(eq.voltage_volt == 0.0);
    CHECK(eq.tidal_force_newton == 0.0);
}

TEST_CASE("equilibrium solve rejects bad pure numbers") {
    CHECK_THROWS_AS(equilibrium_solve(1e4, 0.01, Rational(0), Rational(-2, 3)), DomainError);
    CHECK_THROWS_AS(equilibrium_solve(1e4, 0.01, Rational(-1, 2), Rational(-2, 3)), DomainError);
    CHECK_THROWS_AS(equilibrium_solve(1e4, 0.01, Rational(11, 18), Rational(0)), DomainError);
}

TEST_CASE("free-fall voltage scale: the ~1 volt figure") {
    const double scale = freefall_voltage_scale(1e4, 0.01);
    CHECK(scale == rel(1.176189338085708, 1e-12));
    CHECK(scale > 0.8);
    CHECK(scale < 1.5);
    CHECK(freefall_voltage_scale(1e4, 0.02) == 4.0 * scale); // L^4 under the root
    CHECK(freefall_voltage_scale(1e-30, 0.01) < 1e-15);      // no mass, no voltage

    // closed-form chain: V = |beta|/sqrt(alpha) * V_FF
    EquilibriumResult eq = equilibrium_solve(1e4, 0.01);
    const double chained = (2.0 / 3.0) / std::sqrt(11.0 / 18.0) * scale;
    CHECK(std::abs(eq.voltage_volt - chained) / chained < 1e-12);
}

TEST_CASE("off-axis force projection agrees with the collinear rationals") {
    // canonical dumbbells embedded on the x axis
    std::vector<PointCharge3d> embedded{{-1.0, {0.0, 0.0, 0.0}},
                                        {1.0, {1.0, 0.0, 0.0}},
                                        {1.0, {2.0, 0.0, 0.0}},
                                        {-1.0, {3.0, 0.0, 0.0}}};
    const double along_x = axial_force(embedded, {2, 3}, {1.0, 0.0, 0.0});
    CHECK(along_x == rel(11.0 / 18.0, 1e-14));
    CHECK(std::abs(axial_force(embedded, {2, 3}, {0.0, 1.0, 0.0})) < 1e-14);
    CHECK(axial_force(embedded, {0, 1}, {1.0, 0.0, 0.0}) ==
          rel(-along_x, 1e-14));
    CHECK_THROWS_AS(axial_force(embedded, {0}, {0.0, 0.0, 0.0}), DomainError);
}
