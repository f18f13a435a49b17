#include "qshock/quasilinear.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qshock/errors.hpp"
#include "numerics.hpp"

namespace qshock {

std::array<double, 2> EigenStructure::eigvec_plus() const {
    if (q_rho == 0.0)
        throw EigvecUndefined("eigenvector first component diverges at q_rho = 0");
    return {std::sqrt(rho / q_rho), 1.0};
}

std::array<double, 2> EigenStructure::eigvec_minus() const {
    if (q_rho == 0.0)
        throw EigvecUndefined("eigenvector first component diverges at q_rho = 0");
    return {-std::sqrt(rho / q_rho), 1.0};
}

double q_rho(const FieldProfile& profile, std::size_t i) {
    const std::size_t n = profile.size();
    if (i < 1 || i + 1 >= n)
        throw std::out_of_range("q_rho: index needs both neighbors on the grid");
    const auto& rho = profile.rho();
    const auto& q = profile.q();
    // The 2h factors cancel in the ratio; threshold on the raw differences.
    double max_drho = 0.0;
    for (std::size_t j = 1; j + 1 < n; ++j)
        max_drho = std::max(max_drho, std::abs(rho[j + 1] - rho[j - 1]));
    const double drho = rho[i + 1] - rho[i - 1];
    if (std::abs(drho) < 1e-12 * max_drho || max_drho == 0.0)
        throw DegenerateGradient("d rho/dx below threshold at index " + std::to_string(i));
    return (q[i + 1] - q[i - 1]) / drho;
}

EigenStructure eigenstructure(double rho, double u, double q_rho_value) {
    if (!(rho >= 0.0)) throw std::invalid_argument("eigenstructure: rho must be >= 0");
    const double product = rho * q_rho_value;
    if (product < 0.0)
        throw EllipticRegime("rho*q_rho = " + std::to_string(product) +
                             " < 0: complex characteristic speeds");
    const double chi = std::sqrt(product);
    return EigenStructure{rho, u, q_rho_value, chi, u + chi, u - chi};
}

namespace {

void check_same_grid(const FieldProfile& a, const FieldProfile& b) {
    if (a.size() != b.size())
        throw GridMismatch("slices have different grid sizes");
    const double span = a.x().back() - a.x().front();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a.x()[i] - b.x()[i]) > 1e-12 * span)
            throw GridMismatch("slices sampled on different grids");
}

} // namespace

MadelungResidual madelung_residual(const FieldProfile& prev, const FieldProfile& mid,
                                   const FieldProfile& next, std::span<const double> V,
                                   double mass) {
    check_same_grid(mid, prev);
    check_same_grid(mid, next);
    const double dt_lo = mid.t() - prev.t();
    const double dt_hi = next.t() - mid.t();
    if (!(dt_lo > 0.0) || !(dt_hi > 0.0))
        throw std::invalid_argument("madelung_residual: slices must be time-ordered");
    if (std::abs(dt_hi - dt_lo) > 1e-12 * dt_lo)
        throw std::invalid_argument("madelung_residual: slices must be equally spaced in time");
    if (!V.empty() && V.size() != mid.size())
        throw GridMismatch("potential samples do not match the grid");
    if (!(mass > 0.0)) throw std::invalid_argument("madelung_residual: mass must be positive");

    const std::size_t n = mid.size();
    const double h = mid.spacing();
    const double inv2dt = 1.0 / (dt_lo + dt_hi);

    std::vector<double> flux(n), head(n);
    for (std::size_t i = 0; i < n; ++i) {
        flux[i] = mid.rho()[i] * mid.u()[i];
        head[i] = mid.q()[i] + (V.empty() ? 0.0 : V[i] / mass);
    }
    const std::vector<double> dflux = detail::ddx(flux, h);
    const std::vector<double> du = detail::ddx(mid.u(), h);
    const std::vector<double> dhead = detail::ddx(head, h);

    double cont = 0.0, euler = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double c = (next.rho()[i] - prev.rho()[i]) * inv2dt + dflux[i];
        const double e = (next.u()[i] - prev.u()[i]) * inv2dt + mid.u()[i] * du[i] + dhead[i];
        cont = std::max(cont, std::abs(c));
        euler = std::max(euler, std::abs(e));
    }
    return MadelungResidual{cont, euler};
}

} // namespace qshock
