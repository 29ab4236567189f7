#include "qtide/constants.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qtide {

namespace {

constexpr double kElectronCharge = 1.602176634e-19;  // exact since 2019 SI
constexpr double kElectronMass = 9.1093837015e-31;
constexpr double kPlanck = 6.62607015e-34;            // exact since 2019 SI
constexpr double kReducedPlanck = kPlanck / (2.0 * std::numbers::pi);
constexpr double kVacuumPermittivity = 8.8541878128e-12;
constexpr double kBohrRadius = 5.29177210903e-11;
constexpr double kBohrMagneton = 9.2740100783e-24;
constexpr double kFluxQuantum = kPlanck / (2.0 * kElectronCharge);
constexpr double kGravitationalConstant = 6.67430e-11;
constexpr double kStandardGravity = 9.80665;
constexpr double kEarthRadius = 6.371e6;
constexpr double kEarthMass = 5.9722e24;
constexpr double kRydbergFrequency = 3.2898419602508e15;

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError("constant consistency check failed: " + what);
}

double rel_diff(const Quantity& a, const Quantity& b) {
    return std::abs((a - b).value) / std::abs(b.value);
}

} // namespace

double PhysicalConstants::coulomb_prefactor() const {
    return 1.0 / (4.0 * std::numbers::pi * vacuum_permittivity);
}

double PhysicalConstants::earth_gm() const {
    return gravitational_constant * earth_mass;
}

const PhysicalConstants& constants() {
    static const PhysicalConstants c{
        kElectronCharge,
        kElectronMass,
        kReducedPlanck,
        kPlanck,
        kVacuumPermittivity,
        kBohrRadius,
        kBohrMagneton,
        kFluxQuantum,
        kGravitationalConstant,
        kStandardGravity,
        kEarthRadius,
        kEarthMass,
        kRydbergFrequency,
    };
    return c;
}

ConstantQuantities constant_quantities() {
    const PhysicalConstants& c = constants();
    return {
        {c.electron_charge, dim_charge},
        {c.electron_mass, dim_mass},
        {c.reduced_planck, dim_action},
        {c.planck, dim_action},
        {c.vacuum_permittivity, dim_permittivity},
        {c.bohr_radius, dim_length},
        {c.bohr_magneton, dim_magnetic_moment},
        {c.flux_quantum, dim_magnetic_flux},
        {c.gravitational_constant, dim_gravitational_constant},
        {c.surface_gravity, dim_acceleration},
        {c.earth_radius, dim_length},
        {c.earth_mass, dim_mass},
        {c.rydberg_frequency, dim_frequency},
    };
}

void check_constant_consistency() {
    const ConstantQuantities q = constant_quantities();
    const double four_pi = 4.0 * std::numbers::pi;

    // Dimension mismatches below would throw from Quantity subtraction,
    // so the relations are checked structurally as well as numerically.
    Quantity a0 = q.reduced_planck * q.reduced_planck * (q.vacuum_permittivity * four_pi) /
                  (q.electron_mass * q.electron_charge * q.electron_charge);
    require(rel_diff(a0, q.bohr_radius) < 1e-9, "bohr radius vs hbar^2 4 pi eps0/(m e^2)");

    require(constants().flux_quantum == constants().planck / (2.0 * constants().electron_charge),
            "flux quantum stored as h/(2e)");
    Quantity phi0 = q.planck / (q.electron_charge * 2.0);
    require(phi0.dim == dim_magnetic_flux, "flux quantum dimension");

    Quantity mu = q.electron_charge * q.reduced_planck / (q.electron_mass * 2.0);
    require(rel_diff(mu, q.bohr_magneton) < 1e-9, "bohr magneton vs e hbar/(2m)");

    Quantity g_newton = q.gravitational_constant * q.earth_mass /
                        (q.earth_radius * q.earth_radius);
    require(rel_diff(g_newton, q.surface_gravity) < 5e-3, "surface gravity vs G M_E/R_E^2");
}

} // namespace qtide
