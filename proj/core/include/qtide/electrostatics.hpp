#pragma once

#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtide/errors.hpp"
#include "qtide/numerics.hpp"

namespace qtide::electrostatics {

/// Arbitrary-precision rational; all dimensionless electrostatic
/// constants are carried exactly and converted to floating point only
/// after multiplication by dimensional prefactors.
using Rational = boost::multiprecision::cpp_rational;

/// Point charge on the dumbbell axis. Charge in units of Q, position in
/// units of L.
struct PointCharge {
    Rational charge;
    Rational position;
};

/// The two charged dumbbells modeling the polarized cube pair:
/// (-Q at 0, +Q at L) and (+Q at 2L, -Q at 3L). Each dumbbell is
/// neutral, and the layout is invariant under mirroring through the
/// midpoint with the two dipoles pointing oppositely.
struct DumbbellPair {
    std::vector<PointCharge> charges; ///< left outer, left inner, right inner, right outer

    static DumbbellPair canonical();
    /// Validates neutrality per dumbbell and the mirror layout.
    static DumbbellPair from_charges(std::vector<PointCharge> charges);
};

/// Net axial force on the charges indexed by `group` from the rest of
/// the configuration, as an exact rational in units of
/// Q^2/(4 pi eps0 L^2). The sign is the +x component; for a group lying
/// on the +x side of its complement, positive means repulsive (directed
/// away from the other group). Coincident charges raise
/// SingularityError.
Rational coulomb_force(const std::vector<PointCharge>& config,
                       const std::vector<std::size_t>& group);

/// Force between the canonical dumbbells: exactly 11/18.
Rational alpha_constant();

/// Which sources contribute to the end-to-end voltage of the left
/// dumbbell.
enum class VoltageConvention {
    all_other_charges,      ///< each end sees the three charges that are not itself
    other_dumbbell_only,    ///< each end sees only the right dumbbell
    partner_only,           ///< each end sees only its own dumbbell's other ball
    midpoint_nearest_charge ///< each end sees only the external charge nearest the circuit midpoint
};

std::string_view convention_name(VoltageConvention convention);
std::string_view convention_description(VoltageConvention convention);

/// Voltage across the left dumbbell in units of Q/(4 pi eps0 L), signed
/// as V(inner end) - V(outer end), where the inner end faces the circuit
/// midpoint. Canonical values: -5/3, 1/3, -2, 1/2 for the four
/// conventions in declaration order.
struct DumbbellVoltage {
    Rational value;
    VoltageConvention convention;
};

DumbbellVoltage dumbbell_voltage(const DumbbellPair& pair, VoltageConvention convention);
std::vector<DumbbellVoltage> dumbbell_voltage_candidates(const DumbbellPair& pair);

/// Horizontal tidal force M g' = rho L^3 * g L / R_E on one cube, N.
double tidal_force_on_cube(double density_kg_m3, double edge_m);
double tidal_force_on_cube(double density_kg_m3, double edge_m, double gravity);

/// Charge and voltage at which the dumbbell Coulomb repulsion balances
/// the tidal force.
struct EquilibriumResult {
    double charge_coulomb;      ///< Q
    double voltage_volt;        ///< |V| = |beta| Q/(4 pi eps0 L)
    int voltage_sign;           ///< sign of beta
    double coulomb_force_newton;///< recomputed from Q
    double tidal_force_newton;
    double residual;            ///< |F_coulomb - F_tidal| / F_tidal
    Rational alpha;
    Rational beta;
};

/// Closed-form solve of alpha Q^2/(4 pi eps0 L^2) = rho g L^4 / R_E,
/// cross-checked against a bisection root find. alpha must be positive
/// and beta nonzero.
EquilibriumResult equilibrium_solve(double density_kg_m3, double edge_m,
                                    const Rational& alpha, const Rational& beta);
EquilibriumResult equilibrium_solve(double density_kg_m3, double edge_m,
                                    const Rational& alpha, const Rational& beta,
                                    double gravity);
EquilibriumResult equilibrium_solve(double density_kg_m3, double edge_m);

/// Free-fall voltage scale sqrt(rho g L^4 / (4 pi eps0 R_E)), V.
double freefall_voltage_scale(double density_kg_m3, double edge_m);

/// Double-precision variant for charge sets off the axis: net force on
/// `group` projected on `axis`, in units of Q^2/(4 pi eps0 L^2) with
/// positions in units of L.
struct PointCharge3d {
    double charge;
    Vec3 position;
};

double axial_force(const std::vector<PointCharge3d>& config,
                   const std::vector<std::size_t>& group, const Vec3& axis);

} // namespace qtide::electrostatics
