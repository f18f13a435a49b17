#pragma once

#include <cstddef>
#include <vector>

namespace qshock {

/// Sampled 1D hydrodynamic state at a fixed time: density, velocity and
/// quantum potential on a uniform grid. The grid must be uniform to one part
/// in 1e-12 and carry at least 8 points; rho must be nonnegative everywhere.
class FieldProfile {
public:
    FieldProfile(std::vector<double> x, std::vector<double> rho,
                 std::vector<double> u, std::vector<double> q, double t);

    const std::vector<double>& x() const noexcept { return x_; }
    const std::vector<double>& rho() const noexcept { return rho_; }
    const std::vector<double>& u() const noexcept { return u_; }
    const std::vector<double>& q() const noexcept { return q_; }
    double t() const noexcept { return t_; }

    std::size_t size() const noexcept { return x_.size(); }
    double spacing() const noexcept { return spacing_; }

private:
    std::vector<double> x_, rho_, u_, q_;
    double t_;
    double spacing_;
};

/// Restrict a profile to the sample points with x_lo <= x <= x_hi.
/// The result must still satisfy the profile invariants (>= 8 points).
FieldProfile crop(const FieldProfile& p, double x_lo, double x_hi);

} // namespace qshock
