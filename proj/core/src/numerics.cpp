#include "qtide/numerics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qtide::numerics {

namespace {

QuadratureRule build_gauss_legendre(int order) {
    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int k = 0; k < half; ++k) {
        // Chebyshev-like initial guess, then Newton on P_order.
        double x = std::cos(std::numbers::pi * (k + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[k] = -x;
        rule.weights[k] = w;
        rule.nodes[order - 1 - k] = x;
        rule.weights[order - 1 - k] = w;
    }
    return rule;
}

} // namespace

const QuadratureRule& gauss_legendre(int order) {
    if (order < 2) throw std::invalid_argument("gauss_legendre: order must be >= 2");
    static std::map<int, QuadratureRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build_gauss_legendre(order)).first;
    return it->second;
}

double integrate_log(const std::function<double(double)>& log_f, double a, double b,
                     int panels, int order) {
    const QuadratureRule& rule = gauss_legendre(order);
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(panels) * order);
    double max_term = -std::numeric_limits<double>::infinity();
    const double panel_width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * panel_width;
        const double half = 0.5 * panel_width;
        const double mid = lo + half;
        for (int j = 0; j < order; ++j) {
            const double x = mid + half * rule.nodes[j];
            const double lf = log_f(x);
            if (!std::isfinite(lf)) continue; // vanishing integrand
            const double term = lf + std::log(rule.weights[j] * half);
            terms.push_back(term);
            max_term = std::max(max_term, term);
        }
    }
    if (terms.empty()) return -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - max_term);
    return max_term + std::log(sum);
}

PeakWindow bracket_peak(const std::function<double(double)>& log_f, double peak, double width,
                        double lo_limit, double drop) {
    const double ref = log_f(peak);
    double hi = peak + width;
    for (int i = 0; i < 400 && log_f(hi) > ref - drop; ++i) hi += 0.5 * width;
    double lo = std::max(lo_limit, peak - width);
    for (int i = 0; i < 400 && lo > lo_limit && log_f(lo) > ref - drop; ++i)
        lo = std::max(lo_limit, lo - 0.5 * width);
    return {lo, hi};
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol_rel, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisect: interval does not bracket a root");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        if (hi - lo <= tol_rel * std::max(std::abs(lo), std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace qtide::numerics
