#pragma once

#include "qshock/profile.hpp"

namespace qshock {

/// Physical constants and Gaussian packet parameters.
/// hbar, m, sigma0 are strictly positive; u0 and k are finite reals.
struct PacketParams {
    double hbar;
    double m;
    double sigma0;
    double u0;
    double k; // carrier wavenumber; m*u0/hbar unless overridden

    PacketParams(double hbar, double m, double sigma0, double u0);
    PacketParams(double hbar, double m, double sigma0, double u0, double k);

    /// Dispersion time scale 2*m*sigma0^2/hbar: spread(char_time) = sigma0*sqrt(2).
    double char_time() const noexcept { return 2.0 * m * sigma0 * sigma0 / hbar; }
};

/// Closed-form packet quantities at one point (x, t).
/// rho is computed as the square of amplitude, bit for bit.
struct PacketFields {
    double amplitude; // R(x,t)
    double phase;     // S(x,t), action units
    double rho;       // R^2
    double sigma;     // spread at t
};

/// sigma(t) = sigma0 * sqrt(1 + (hbar*t / 2*m*sigma0^2)^2). Even in t; >= sigma0.
double spread(const PacketParams& p, double t);

/// Amplitude, phase, density and spread at (x, t).
PacketFields fields(const PacketParams& p, double x, double t);

/// Q(x,t) = (hbar^2 / 4 m^2 sigma^2) * (3 - (x - u0 t)^2 / 2 sigma^2).
double quantum_potential(const PacketParams& p, double x, double t);

/// -dQ/dx = hbar^2 (x - u0 t) / (4 m^2 sigma^4).
/// An alternative reading with a single power of m in the denominator exists;
/// this implementation keeps the form consistent with the Q above.
double quantum_force(const PacketParams& p, double x, double t);

/// u(x,t) = u0 + (hbar^2 t / 4 m^2 sigma0^2 sigma^2) * (x - u0 t).
double velocity(const PacketParams& p, double x, double t);

/// x(t) = u0 t + x0 * sqrt(1 + (hbar t / 2 m sigma0^2)^2); trajectory(p, x0, 0) = x0.
double trajectory(const PacketParams& p, double x0, double t);

/// Sample rho, u, Q on the closed interval [x_min, x_max] with n points.
/// With normalized = true the density is rescaled to unit trapezoid mass on
/// the evaluation grid (the raw closed form carries a three-halves-power
/// prefactor that does not integrate to 1 in one dimension).
FieldProfile sample_profile(const PacketParams& p, double x_min, double x_max,
                            int n, double t, bool normalized = false);

} // namespace qshock
