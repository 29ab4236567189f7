#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace qtide {

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

namespace numerics {

/// Nodes and weights on [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order (Newton on the Legendre
/// recurrence). Rules are cached; orders up to a few hundred are fine.
const QuadratureRule& gauss_legendre(int order);

/// log of the integral of exp(log_f) over [a, b], by composite
/// Gauss-Legendre with the summation done in the log domain, so
/// integrands spanning thousands of e-folds are handled without
/// overflow. log_f may return -inf where the integrand vanishes.
double integrate_log(const std::function<double(double)>& log_f, double a, double b,
                     int panels = 32, int order = 48);

/// Expands [peak - width, peak + width] outward until log_f has dropped
/// by at least `drop` relative to its value at `peak` on both sides
/// (clamped below at lo_limit). Used to window sharply peaked
/// integrands before quadrature.
struct PeakWindow {
    double lo;
    double hi;
};
PeakWindow bracket_peak(const std::function<double(double)>& log_f, double peak, double width,
                        double lo_limit, double drop = 70.0);

/// Bisection root find on [lo, hi]; f(lo) and f(hi) must bracket a sign
/// change. Converges to relative interval width tol_rel.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol_rel = 1e-14, int max_iter = 200);

} // namespace numerics
} // namespace qtide
