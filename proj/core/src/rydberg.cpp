#include "qtide/rydberg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qtide/constants.hpp"
#include "qtide/numerics.hpp"

namespace qtide::rydberg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxQuadratureN = 200;

// log of integral of r^power exp(-decay r) dr over (0, inf), numerically.
// The integrand peaks at power/decay with relative width 1/sqrt(power);
// the window is expanded until the log density has dropped by ~80.
double log_radial_integral(double power, double decay) {
    auto log_f = [power, decay](double r) {
        if (r <= 0.0) return -std::numeric_limits<double>::infinity();
        return power * std::log(r) - decay * r;
    };
    const double peak = power / decay;
    const double width = 10.0 * peak / std::sqrt(std::max(power, 2.0));
    auto window = numerics::bracket_peak(log_f, peak, width, 0.0, 80.0);
    return numerics::integrate_log(log_f, window.lo, window.hi);
}

// log of integral of sin(theta)^power dtheta over (0, pi), numerically.
double log_angular_integral(double power) {
    auto log_f = [power](double theta) {
        if (theta <= 0.0 || theta >= std::numbers::pi)
            return -std::numeric_limits<double>::infinity();
        return power * std::log(std::sin(theta));
    };
    return numerics::integrate_log(log_f, 0.0, std::numbers::pi, 48, 64);
}

// log of the closed-form angular integral of sin^(2k-1):
// 2^(2k-1) ((k-1)!)^2 / (2k-1)!
double log_angular_closed(int k) {
    return (2.0 * k - 1.0) * std::numbers::ln2 + 2.0 * std::lgamma(k) - std::lgamma(2.0 * k);
}

} // namespace

CircularState circular_state(int n) { return CircularState(n); }

double orbit_radius(const CircularState& state) {
    const double n = state.n;
    return n * n * constants().bohr_radius;
}

double transverse_moment(const CircularState& state, MomentModel model) {
    const double n = state.n;
    const double a0 = constants().bohr_radius;
    if (model == MomentModel::asymptotic) return n * n * n * n * a0 * a0;
    return n * n * n * (n + 1.0) * a0 * a0;
}

double rms_transverse_size(const CircularState& state, MomentModel model) {
    return std::sqrt(transverse_moment(state, model));
}

double transverse_moment_quadrature(const CircularState& state) {
    const int n = state.n;
    if (n > kMaxQuadratureN)
        throw DomainError("transverse_moment_quadrature supports n <= 200");
    const double decay = 2.0 / (n * constants().bohr_radius);
    const double log_radial_ratio =
        log_radial_integral(2.0 * n + 2.0, decay) - log_radial_integral(2.0 * n, decay);
    const double log_angular_ratio =
        log_angular_integral(2.0 * n + 1.0) - log_angular_integral(2.0 * n - 1.0);
    return std::exp(log_radial_ratio + log_angular_ratio);
}

double normalization_check(const CircularState& state) {
    const int n = state.n;
    if (n > kMaxQuadratureN) throw DomainError("normalization_check supports n <= 200");
    const double decay = 2.0 / (n * constants().bohr_radius);

    // Closed-form log N^2 from Gamma radial and Wallis angular integrals.
    const double log_norm_sq = -(std::lgamma(2.0 * n + 1.0) - (2.0 * n + 1.0) * std::log(decay) +
                                 log_angular_closed(n) + std::log(kTwoPi));

    const double log_integral = log_norm_sq + log_radial_integral(2.0 * n, decay) +
                                log_angular_integral(2.0 * n - 1.0) + std::log(kTwoPi);
    return std::abs(std::exp(log_integral) - 1.0);
}

double magnetic_moment(int n) {
    if (n < 1) throw DomainError("magnetic_moment requires n >= 1");
    return n * constants().bohr_magneton;
}

double trapped_flux(int n) {
    if (n < 0) throw DomainError("trapped_flux requires n >= 0");
    return n * constants().flux_quantum;
}

double transition_frequency(int n_upper, int n_lower) {
    if (n_lower < 1 || n_upper <= n_lower)
        throw DomainError("transition_frequency requires n_upper > n_lower >= 1");
    const double lo = static_cast<double>(n_lower);
    const double hi = static_cast<double>(n_upper);
    return constants().rydberg_frequency * (1.0 / (lo * lo) - 1.0 / (hi * hi));
}

PhaseLoop PhaseLoop::from_samples(std::vector<Sample> samples) {
    if (samples.size() < 8) throw DomainError("phase loop requires at least 8 samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double angle = samples[i].angle;
        if (angle < 0.0 || angle >= kTwoPi)
            throw DomainError("phase loop angles must lie in [0, 2 pi)");
        if (i > 0 && angle <= samples[i - 1].angle)
            throw DomainError("phase loop angles must be strictly increasing");
    }
    return PhaseLoop{std::move(samples)};
}

int winding_number(const PhaseLoop& loop) {
    const auto& s = loop.samples;
    if (s.size() < 8) throw DomainError("phase loop requires at least 8 samples");

    // Wrap each adjacent jump into (-pi, pi]; a jump at the +-pi boundary
    // is ambiguous, which means the loop is undersampled.
    auto wrapped_jump = [](double from, double to) {
        const double d = std::remainder(to - from, kTwoPi);
        if (std::abs(d) >= std::numbers::pi * (1.0 - 1e-12))
            throw UndersampledError("phase jump of magnitude >= pi between adjacent samples");
        return d;
    };

    double total = 0.0;
    for (std::size_t i = 1; i < s.size(); ++i) total += wrapped_jump(s[i - 1].phase, s[i].phase);
    total += wrapped_jump(s.back().phase, s.front().phase); // closing segment
    return static_cast<int>(std::llround(total / kTwoPi));
}

bool adiabaticity_check(const QuantumSystemKind& system, double gap_frequency_hz,
                        double perturbation_frequency_hz, double margin) {
    if (gap_frequency_hz < 0.0 || perturbation_frequency_hz < 0.0)
        throw DomainError("adiabaticity_check requires nonnegative frequencies");
    if (!(margin > 1.0)) throw DomainError("adiabaticity_check requires margin > 1");
    if (!system.allowed_adjacent_transitions) return true; // metastable by selection rule
    return perturbation_frequency_hz * margin < gap_frequency_hz;
}

} // namespace qtide::rydberg
