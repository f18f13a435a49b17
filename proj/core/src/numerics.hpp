#pragma once

// Internal numerical kernels shared across modules. Not installed.

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qshock::detail {

// Second-order first derivative on a uniform grid: central interior stencils,
// one-sided second-order stencils at both boundaries.
inline std::vector<double> ddx(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 3) throw std::invalid_argument("ddx: need at least 3 samples");
    std::vector<double> d(n);
    const double inv2h = 1.0 / (2.0 * h);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2h;
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) * inv2h;
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2h;
    return d;
}

// Trapezoid rule on a uniform closed grid.
inline double trapezoid(const std::vector<double>& f, double h) {
    if (f.size() < 2) throw std::invalid_argument("trapezoid: need at least 2 samples");
    double sum = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += f[i];
    return sum * h;
}

// Bisection on a bracketing interval [a, b] with f(a)*f(b) <= 0, to a relative
// interval tolerance. The bracket endpoints' values are passed in so the
// caller's scan evaluations are reused.
inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double fa, double rel_tol) {
    if (!(a < b)) throw std::invalid_argument("bisect: empty bracket");
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (a + b);
        if (b - a <= rel_tol * std::max(std::abs(a), std::abs(b))) return mid;
        const double fm = f(mid);
        if ((fa <= 0.0 && fm <= 0.0) || (fa >= 0.0 && fm >= 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

// n log-spaced samples over [lo, hi], endpoints included.
inline std::vector<double> log_spaced(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        throw std::invalid_argument("log_spaced: need 0 < lo < hi and n >= 2");
    std::vector<double> out(static_cast<std::size_t>(n));
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / (n - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

inline std::vector<double> lin_spaced(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("lin_spaced: need n >= 2");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    out.back() = hi;
    return out;
}

} // namespace qshock::detail
