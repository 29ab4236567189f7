#pragma once

// Test-only numeric oracles. These deliberately avoid the library's
// quadrature and summation code paths: composite Simpson instead of
// Gauss-Legendre, long double compensated sums instead of exact
// rationals, dense resampling instead of the loop unwrapper.

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracles {

// log of the integral of exp(log_f) over [a, b], composite Simpson with
// the accumulation done in the log domain. intervals must be even.
inline double simpson_log(const std::function<double(double)>& log_f, double a, double b,
                          int intervals) {
    const double h = (b - a) / intervals;
    std::vector<double> terms;
    terms.reserve(intervals + 1);
    double max_term = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= intervals; ++i) {
        const double x = a + i * h;
        const double coeff = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        const double lf = log_f(x);
        if (!std::isfinite(lf)) continue;
        const double term = lf + std::log(coeff * h / 3.0);
        terms.push_back(term);
        max_term = std::max(max_term, term);
    }
    long double sum = 0.0L;
    for (double t : terms) sum += std::exp(static_cast<long double>(t - max_term));
    return max_term + static_cast<double>(std::log(sum));
}

// <x^2 + y^2> of the stretch-state density by Simpson quadrature, m^2.
inline double transverse_moment_simpson(int n, double bohr_radius, int intervals = 16384) {
    const double decay = 2.0 / (n * bohr_radius);
    auto log_radial = [&](double power) {
        const double peak = power / decay;
        const double sigma = peak / std::sqrt(std::max(power, 2.0));
        const double lo = std::max(0.0, peak - 25.0 * sigma);
        const double hi = peak + 25.0 * sigma;
        return simpson_log(
            [power, decay](double r) {
                if (r <= 0.0) return -std::numeric_limits<double>::infinity();
                return power * std::log(r) - decay * r;
            },
            lo, hi, intervals);
    };
    auto log_angular = [&](double power) {
        const double pi = 3.14159265358979323846;
        return simpson_log(
            [power, pi](double theta) {
                if (theta <= 0.0 || theta >= pi)
                    return -std::numeric_limits<double>::infinity();
                return power * std::log(std::sin(theta));
            },
            0.0, pi, intervals);
    };
    return std::exp(log_radial(2.0 * n + 2.0) - log_radial(2.0 * n) +
                    log_angular(2.0 * n + 1.0) - log_angular(2.0 * n - 1.0));
}

// Plain-domain Simpson for well-scaled integrands.
inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    const double h = (b - a) / intervals;
    long double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0L : 2.0L) * f(a + i * h);
    return static_cast<double>(sum * h / 3.0L);
}

// Winding of a continuous phase function over one loop turn, by dense
// resampling and jump wrapping.
inline int brute_force_winding(const std::function<double(double)>& phase_of_angle, int samples) {
    const double two_pi = 2.0 * 3.14159265358979323846;
    double total = 0.0;
    double previous = phase_of_angle(0.0);
    for (int k = 1; k <= samples; ++k) {
        const double current = phase_of_angle(two_pi * k / samples);
        total += std::remainder(current - previous, two_pi);
        previous = current;
    }
    return static_cast<int>(std::llround(total / two_pi));
}

} // namespace oracles
