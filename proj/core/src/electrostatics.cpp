#include "qtide/electrostatics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qtide/constants.hpp"

namespace qtide::electrostatics {

namespace {

using boost::multiprecision::abs;

void check_distinct_positions(const std::vector<PointCharge>& config) {
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = i + 1; j < config.size(); ++j)
            if (config[i].position == config[j].position)
                throw SingularityError("two point charges share a position");
}

bool in_group(const std::vector<std::size_t>& group, std::size_t index) {
    return std::find(group.begin(), group.end(), index) != group.end();
}

// Potential at `where` from the listed sources, in units of
// Q/(4 pi eps0 L); a source sitting exactly at `where` is skipped.
Rational potential_at(const Rational& where, const std::vector<PointCharge>& sources) {
    Rational sum = 0;
    for (const auto& src : sources) {
        if (src.position == where) continue;
        sum += src.charge / abs(where - src.position);
    }
    return sum;
}

double four_pi_eps0() {
    return 4.0 * std::numbers::pi * constants().vacuum_permittivity;
}

} // namespace

DumbbellPair DumbbellPair::canonical() {
    return from_charges({{Rational(-1), Rational(0)},
                         {Rational(1), Rational(1)},
                         {Rational(1), Rational(2)},
                         {Rational(-1), Rational(3)}});
}

DumbbellPair DumbbellPair::from_charges(std::vector<PointCharge> charges) {
    if (charges.size() != 4) throw DomainError("dumbbell pair requires exactly 4 charges");
    check_distinct_positions(charges);
    std::sort(charges.begin(), charges.end(),
              [](const PointCharge& a, const PointCharge& b) { return a.position < b.position; });
    if (charges[0].charge + charges[1].charge != 0 || charges[2].charge + charges[3].charge != 0)
        throw DomainError("each dumbbell must carry zero net charge");
    // Mirror layout about the configuration midpoint: equal charge at
    // mirrored positions, i.e. antiparallel dipoles.
    const Rational span = charges[0].position + charges[3].position;
    if (charges[0].charge != charges[3].charge || charges[1].charge != charges[2].charge ||
        charges[1].position + charges[2].position != span)
        throw DomainError("dumbbell pair must be mirror-antisymmetric about its midpoint");
    return DumbbellPair{std::move(charges)};
}

Rational coulomb_force(const std::vector<PointCharge>& config,
                       const std::vector<std::size_t>& group) {
    if (group.empty()) throw DomainError("coulomb_force: group must be non-empty");
    for (std::size_t index : group)
        if (index >= config.size()) throw DomainError("coulomb_force: group index out of range");
    check_distinct_positions(config);

    Rational total = 0;
    for (std::size_t i : group) {
        for (std::size_t j = 0; j < config.size(); ++j) {
            if (in_group(group, j)) continue;
            const Rational d = config[i].position - config[j].position;
            // Force on i along +x: q_i q_j / d^2 with the sign of d.
            Rational term = config[i].charge * config[j].charge / (d * d);
            total += d > 0 ? term : -term;
        }
    }
    return total;
}

Rational alpha_constant() {
    const DumbbellPair pair = DumbbellPair::canonical();
    return coulomb_force(pair.charges, {2, 3});
}

std::string_view convention_name(VoltageConvention convention) {
    switch (convention) {
        case VoltageConvention::all_other_charges: return "all-other-charges";
        case VoltageConvention::other_dumbbell_only: return "other-dumbbell-only";
        case VoltageConvention::partner_only: return "partner-only";
        case VoltageConvention::midpoint_nearest_charge: return "midpoint-nearest-charge";
    }
    return "unknown";
}

std::string_view convention_description(VoltageConvention convention) {
    switch (convention) {
        case VoltageConvention::all_other_charges:
            return "each end sees the three charges that are not itself";
        case VoltageConvention::other_dumbbell_only:
            return "each end sees the two charges of the other dumbbell";
        case VoltageConvention::partner_only:
            return "each end sees only its own dumbbell's other ball";
        case VoltageConvention::midpoint_nearest_charge:
            return "each end sees only the external charge nearest the circuit midpoint";
    }
    return "unknown";
}

DumbbellVoltage dumbbell_voltage(const DumbbellPair& pair, VoltageConvention convention) {
    // from_charges sorted by position: [0] outer end, [1] inner end of
    // the left dumbbell; [2], [3] the right dumbbell.
    const Rational outer = pair.charges[0].position;
    const Rational inner = pair.charges[1].position;

    std::vector<PointCharge> sources_outer;
    std::vector<PointCharge> sources_inner;
    switch (convention) {
        case VoltageConvention::all_other_charges:
            sources_outer = {pair.charges[1], pair.charges[2], pair.charges[3]};
            sources_inner = {pair.charges[0], pair.charges[2], pair.charges[3]};
            break;
        case VoltageConvention::other_dumbbell_only:
            sources_outer = sources_inner = {pair.charges[2], pair.charges[3]};
            break;
        case VoltageConvention::partner_only:
            sources_outer = {pair.charges[1]};
            sources_inner = {pair.charges[0]};
            break;
        case VoltageConvention::midpoint_nearest_charge:
            // For the left dumbbell the external charge nearest the
            // circuit midpoint is the right dumbbell's inner ball.
            sources_outer = sources_inner = {pair.charges[2]};
            break;
    }
    const Rational value = potential_at(inner, sources_inner) - potential_at(outer, sources_outer);
    return {value, convention};
}

std::vector<DumbbellVoltage> dumbbell_voltage_candidates(const DumbbellPair& pair) {
    return {dumbbell_voltage(pair, VoltageConvention::all_other_charges),
            dumbbell_voltage(pair, VoltageConvention::other_dumbbell_only),
            dumbbell_voltage(pair, VoltageConvention::partner_only),
            dumbbell_voltage(pair, VoltageConvention::midpoint_nearest_charge)};
}

double tidal_force_on_cube(double density_kg_m3, double edge_m) {
    return tidal_force_on_cube(density_kg_m3, edge_m, constants().surface_gravity);
}

double tidal_force_on_cube(double density_kg_m3, double edge_m, double gravity) {
    if (!(density_kg_m3 > 0.0) || !(edge_m > 0.0))
        throw DomainError("tidal_force_on_cube: density and edge must be positive");
    if (gravity < 0.0) throw DomainError("tidal_force_on_cube: gravity must be nonnegative");
    const double l4 = edge_m * edge_m * edge_m * edge_m;
    return density_kg_m3 * gravity * l4 / constants().earth_radius;
}

EquilibriumResult equilibrium_solve(double density_kg_m3, double edge_m) {
    return equilibrium_solve(density_kg_m3, edge_m, alpha_constant(), Rational(-2, 3));
}

EquilibriumResult equilibrium_solve(double density_kg_m3, double edge_m,
                                    const Rational& alpha, const Rational& beta) {
    return equilibrium_solve(density_kg_m3, edge_m, alpha, beta, constants().surface_gravity);
}

EquilibriumResult equilibrium_solve(double density_kg_m3, double edge_m,
                                    const Rational& alpha, const Rational& beta,
                                    double gravity) {
    if (alpha <= 0) throw DomainError("equilibrium_solve: alpha must be positive");
    if (beta == 0) throw DomainError("equilibrium_solve: beta must be nonzero");

    const double alpha_d = static_cast<double>(alpha);
    const double beta_d = static_cast<double>(beta);
    const double f_tidal = tidal_force_on_cube(density_kg_m3, edge_m, gravity);
    const double kq = four_pi_eps0() * edge_m * edge_m; // 4 pi eps0 L^2

    const double charge = std::sqrt(f_tidal * kq / alpha_d);
    if (charge > 0.0) {
        // Closed form cross-checked by an independent bisection solve.
        auto imbalance = [&](double q) { return alpha_d * q * q / kq - f_tidal; };
        const double root = numerics::bisect(imbalance, 0.0, 2.0 * charge);
        if (std::abs(root - charge) > 1e-9 * charge)
            throw ValidationError("equilibrium_solve: root-finder cross-check failed");
    }

    const double f_coulomb = alpha_d * charge * charge / kq;
    const double residual = f_tidal > 0.0 ? std::abs(f_coulomb - f_tidal) / f_tidal : 0.0;
    const double voltage = std::abs(beta_d) * charge / (four_pi_eps0() * edge_m);

    return {charge,   voltage,  beta_d < 0.0 ? -1 : 1, f_coulomb,
            f_tidal,  residual, alpha,                 beta};
}

double freefall_voltage_scale(double density_kg_m3, double edge_m) {
    if (!(density_kg_m3 > 0.0) || !(edge_m > 0.0))
        throw DomainError("freefall_voltage_scale: density and edge must be positive");
    const PhysicalConstants& c = constants();
    const double l4 = edge_m * edge_m * edge_m * edge_m;
    return std::sqrt(density_kg_m3 * c.surface_gravity * l4 /
                     (four_pi_eps0() * c.earth_radius));
}

double axial_force(const std::vector<PointCharge3d>& config,
                   const std::vector<std::size_t>& group, const Vec3& axis) {
    if (group.empty()) throw DomainError("axial_force: group must be non-empty");
    const double axis_norm = norm(axis);
    if (axis_norm == 0.0) throw DomainError("axial_force: axis must be nonzero");
    const Vec3 unit = (1.0 / axis_norm) * axis;

    double total = 0.0;
    for (std::size_t i : group) {
        if (i >= config.size()) throw DomainError("axial_force: group index out of range");
        for (std::size_t j = 0; j < config.size(); ++j) {
            if (in_group(group, j)) continue;
            const Vec3 d = config[i].position - config[j].position;
            const double r = norm(d);
            if (r == 0.0) throw SingularityError("two point charges share a position");
            total += config[i].charge * config[j].charge * dot(d, unit) / (r * r * r);
        }
    }
    return total;
}

} // namespace qtide::electrostatics
