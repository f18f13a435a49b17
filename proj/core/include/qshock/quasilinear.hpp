#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "qshock/profile.hpp"

namespace qshock {

/// Eigenstructure of the quasilinear coefficient matrix [[u, rho], [q_rho, u]]
/// at one state point. The characteristic speed chi = sqrt(rho * q_rho) is
/// stored once so that the eigenvalue gap is 2*chi by construction, keeping
/// the identity lambda_plus - lambda_minus = 2*sqrt(rho*q_rho) exact in
/// floating point (subtracting the rounded eigenvalues would not be).
struct EigenStructure {
    double rho;
    double u;
    double q_rho;
    double char_speed;   // sqrt(rho * q_rho)
    double lambda_plus;  // u + char_speed
    double lambda_minus; // u - char_speed

    double lambda_gap() const noexcept { return 2.0 * char_speed; }

    /// (+sqrt(rho/q_rho), 1); throws EigvecUndefined when q_rho == 0.
    std::array<double, 2> eigvec_plus() const;
    /// (-sqrt(rho/q_rho), 1); throws EigvecUndefined when q_rho == 0.
    std::array<double, 2> eigvec_minus() const;
};

/// Pointwise dQ/d rho along a profile, realized as the central-difference
/// ratio (dQ/dx) / (d rho/dx) at interior index i (1 <= i <= n-2).
/// Throws DegenerateGradient when |d rho/dx| < 1e-12 * max_j |d rho/dx|,
/// e.g. exactly at the density peak.
double q_rho(const FieldProfile& profile, std::size_t i);

/// Eigenvalues and eigenvectors for the state (rho, u, q_rho).
/// Throws EllipticRegime when rho*q_rho < 0 (complex speeds are reported,
/// never computed). q_rho == 0 yields lambda_plus == lambda_minus == u; the
/// eigenvector accessors then throw.
EigenStructure eigenstructure(double rho, double u, double q_rho);

/// L-infinity norms of the discretized continuity and momentum residuals.
struct MadelungResidual {
    double continuity; // d rho/dt + d(rho u)/dx
    double euler;      // du/dt + u du/dx + d(V/m + Q)/dx
};

/// Residuals from three time slices prev/mid/next on one grid, with central
/// differences in x and t. V is an optional external potential sampled on the
/// same grid (empty span: V = 0); mass scales its contribution (1/m) d V/dx.
/// Throws GridMismatch when the slices disagree on the grid; the slices must
/// be equally spaced in time.
MadelungResidual madelung_residual(const FieldProfile& prev, const FieldProfile& mid,
                                   const FieldProfile& next,
                                   std::span<const double> V = {}, double mass = 1.0);

} // namespace qshock
