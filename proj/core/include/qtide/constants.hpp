#pragma once

#include "qtide/quantity.hpp"

namespace qtide {

/// Pinned fundamental constants (CODATA 2018) and Earth parameters, SI.
///
/// The set is fixed at build time so every run of the workbench is
/// reproducible bit for bit. reduced_planck is stored as planck/(2*pi)
/// evaluated in double precision and flux_quantum as planck/(2*e), so the
/// defining relations hold exactly as stored.
struct PhysicalConstants {
    double electron_charge;        ///< e, C
    double electron_mass;          ///< m_e, kg
    double reduced_planck;         ///< hbar, J s
    double planck;                 ///< h, J s
    double vacuum_permittivity;    ///< eps0, F/m
    double bohr_radius;            ///< a0, m
    double bohr_magneton;          ///< mu_B, J/T
    double flux_quantum;           ///< Phi0 = h/(2e), Wb
    double gravitational_constant; ///< G, m^3 kg^-1 s^-2
    double surface_gravity;        ///< g, m/s^2 (standard gravity)
    double earth_radius;           ///< R_E, m (mean radius)
    double earth_mass;             ///< M_E, kg
    double rydberg_frequency;      ///< R_inf * c, Hz

    /// 1/(4 pi eps0), N m^2 / C^2.
    double coulomb_prefactor() const;
    /// G * M_E, m^3/s^2.
    double earth_gm() const;
};

/// The single pinned constant set; identical on every call.
const PhysicalConstants& constants();

/// The same values with dimension vectors attached, for bookkeeping.
struct ConstantQuantities {
    Quantity electron_charge;
    Quantity electron_mass;
    Quantity reduced_planck;
    Quantity planck;
    Quantity vacuum_permittivity;
    Quantity bohr_radius;
    Quantity bohr_magneton;
    Quantity flux_quantum;
    Quantity gravitational_constant;
    Quantity surface_gravity;
    Quantity earth_radius;
    Quantity earth_mass;
    Quantity rydberg_frequency;
};

ConstantQuantities constant_quantities();

/// Verifies the pinned set against its defining relations, dimensions
/// included:
///   a0    = hbar^2 4 pi eps0 / (m e^2)   to 1e-9 relative
///   Phi0  = h/(2e)                       exactly as stored
///   mu_B  = e hbar/(2m)                  to 1e-9 relative
///   g     = G M_E / R_E^2                to 0.5%
/// Throws ValidationError on any miss. Cheap enough to run at startup.
void check_constant_consistency();

} // namespace qtide
