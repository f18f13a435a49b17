#include "qshock/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qshock {

FieldProfile::FieldProfile(std::vector<double> x, std::vector<double> rho,
                           std::vector<double> u, std::vector<double> q, double t)
    : x_(std::move(x)), rho_(std::move(rho)), u_(std::move(u)), q_(std::move(q)), t_(t) {
    const std::size_t n = x_.size();
    if (n < 8) throw std::invalid_argument("FieldProfile: need at least 8 samples");
    if (rho_.size() != n || u_.size() != n || q_.size() != n)
        throw std::invalid_argument("FieldProfile: array lengths differ");
    spacing_ = (x_.back() - x_.front()) / static_cast<double>(n - 1);
    if (!(spacing_ > 0.0)) throw std::invalid_argument("FieldProfile: grid not increasing");
    for (std::size_t i = 1; i < n; ++i) {
        const double step = x_[i] - x_[i - 1];
        // grids far from the origin carry rounding of a few ulps of |x| in each
        // node, which can exceed 1e-12 relative to a fine spacing
        const double slack = 1e-12 * spacing_ +
                             8.0 * std::numeric_limits<double>::epsilon() *
                                 std::max(std::abs(x_[i]), std::abs(x_[i - 1]));
        if (std::abs(step - spacing_) > slack)
            throw std::invalid_argument("FieldProfile: grid spacing not uniform to 1e-12");
    }
    for (double r : rho_)
        if (!(r >= 0.0)) throw std::invalid_argument("FieldProfile: negative density");
}

FieldProfile crop(const FieldProfile& p, double x_lo, double x_hi) {
    const auto& xs = p.x();
    std::size_t lo = 0, hi = xs.size();
    while (lo < hi && xs[lo] < x_lo) ++lo;
    while (hi > lo && xs[hi - 1] > x_hi) --hi;
    if (hi - lo < 8) throw std::invalid_argument("crop: fewer than 8 samples remain");
    auto slice = [&](const std::vector<double>& v) {
        return std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(lo),
                                   v.begin() + static_cast<std::ptrdiff_t>(hi));
    };
    return FieldProfile(slice(p.x()), slice(p.rho()), slice(p.u()), slice(p.q()), p.t());
}

} // namespace qshock
