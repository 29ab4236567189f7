#pragma once

#include <vector>

#include "qtide/errors.hpp"

namespace qtide::rydberg {

/// Maximal-angular-momentum ("stretch") hydrogen state |n, n-1, n-1>.
/// The constructor enforces l = m = n-1; there is no way to build any
/// other (l, m) combination.
struct CircularState {
    int n;
    int l;
    int m_quantum;

    explicit CircularState(int principal)
        : n(principal), l(principal - 1), m_quantum(principal - 1) {
        if (principal < 1) throw DomainError("circular state requires n >= 1");
    }
};

CircularState circular_state(int n);

/// Which closed form to use for the mean-square transverse size.
///   exact      : n^3 (n+1) a0^2, the full expectation value
///   asymptotic : n^4 a0^2, the large-n ring approximation a_n^2
enum class MomentModel { exact, asymptotic };

/// Ring radius a_n = n^2 a0, m.
double orbit_radius(const CircularState& state);

/// <x^2 + y^2> over the stretch-state density, m^2.
///
/// The exact value follows from the Gamma-function radial integrals and
/// Wallis angular integrals of the density r^(2n-2) sin^(2n-2)(theta)
/// exp(-2r/(n a0)):
///   <r^2> ratio  = (n a0/2)^2 (2n+2)(2n+1),  angular ratio = 2n/(2n+1)
///   => <x^2+y^2> = n^3 (n+1) a0^2.
double transverse_moment(const CircularState& state, MomentModel model = MomentModel::exact);

/// sqrt(<x^2+y^2>): the rms transverse size of the atom, m.
double rms_transverse_size(const CircularState& state, MomentModel model = MomentModel::exact);

/// <x^2 + y^2> by log-domain Gauss-Legendre quadrature of the density.
/// Independent evaluation route used to cross-check the closed form.
double transverse_moment_quadrature(const CircularState& state);

/// | integral of |Psi|^2 - 1 | with the module's closed-form
/// normalization constant and the quadrature engine. All radial and
/// angular factors are evaluated in the log domain, so n up to 200 works
/// without overflow; larger n is rejected.
double normalization_check(const CircularState& state);

/// mu_n = n mu_B, J/T.
double magnetic_moment(int n);

/// Phi_n = n h/(2e), Wb. n = 0 is allowed (no trapped flux).
double trapped_flux(int n);

/// Rydberg formula, R_inf c (1/n_lower^2 - 1/n_upper^2), Hz.
double transition_frequency(int n_upper, int n_lower);

/// Wavefunction phase sampled around a closed loop, ordered by strictly
/// increasing loop angle in [0, 2 pi). At least 8 samples.
struct PhaseLoop {
    struct Sample {
        double angle;  ///< loop parameter, rad
        double phase;  ///< wavefunction phase at that point, rad
    };
    std::vector<Sample> samples;

    static PhaseLoop from_samples(std::vector<Sample> samples);
};

/// Accumulated phase around the loop divided by 2 pi; exact integer.
/// Adjacent (wrapped) jumps of magnitude >= pi mean the loop cannot be
/// unwrapped unambiguously and raise UndersampledError.
int winding_number(const PhaseLoop& loop);

enum class SystemKind { rydberg_atom, superconducting_ring };

/// Ring-current system plus its adjacent-transition selection rule.
/// Adjacent transitions of a flux-trapping superconducting ring require
/// every Cooper pair to jump at once, so they are treated as forbidden.
struct QuantumSystemKind {
    SystemKind kind;
    bool allowed_adjacent_transitions;

    static QuantumSystemKind rydberg_atom() { return {SystemKind::rydberg_atom, true}; }
    static QuantumSystemKind superconducting_ring() {
        return {SystemKind::superconducting_ring, false};
    }
};

/// True when a perturbation at perturbation_frequency is slow enough,
/// by the given margin (> 1), that no transition across gap_frequency
/// can occur. Systems with no allowed adjacent transition pass always.
bool adiabaticity_check(const QuantumSystemKind& system, double gap_frequency_hz,
                        double perturbation_frequency_hz, double margin);

} // namespace qtide::rydberg
