#include "qshock/packet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "numerics.hpp"

namespace qshock {

namespace {

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string("PacketParams: ") + name +
                                    " must be strictly positive and finite");
}

void check_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string("PacketParams: ") + name + " must be finite");
}

} // namespace

PacketParams::PacketParams(double hbar_, double m_, double sigma0_, double u0_)
    : PacketParams(hbar_, m_, sigma0_, u0_, m_ * u0_ / hbar_) {}

PacketParams::PacketParams(double hbar_, double m_, double sigma0_, double u0_, double k_)
    : hbar(hbar_), m(m_), sigma0(sigma0_), u0(u0_), k(k_) {
    check_positive(hbar, "hbar");
    check_positive(m, "m");
    check_positive(sigma0, "sigma0");
    check_finite(u0, "u0");
    check_finite(k, "k");
}

double spread(const PacketParams& p, double t) {
    const double b = p.hbar * t / (2.0 * p.m * p.sigma0 * p.sigma0);
    return p.sigma0 * std::sqrt(1.0 + b * b);
}

PacketFields fields(const PacketParams& p, double x, double t) {
    const double sigma = spread(p, t);
    const double s2 = sigma * sigma;
    const double xi = x - p.u0 * t;
    const double amplitude =
        std::pow(2.0 * std::numbers::pi * s2, -0.75) * std::exp(-xi * xi / (4.0 * s2));
    // Phase: arctan dispersion term + drift term m*u0*(x - u0 t/2) + quadratic chirp.
    const double phase = -1.5 * p.hbar * std::atan(p.hbar * t / (2.0 * p.m * p.sigma0 * p.sigma0)) +
                         p.m * p.u0 * (x - 0.5 * p.u0 * t) +
                         xi * xi * p.hbar * p.hbar * t / (8.0 * p.m * p.sigma0 * p.sigma0 * s2);
    return PacketFields{amplitude, phase, amplitude * amplitude, sigma};
}

double quantum_potential(const PacketParams& p, double x, double t) {
    const double s2 = spread(p, t) * spread(p, t);
    const double xi = x - p.u0 * t;
    return p.hbar * p.hbar / (4.0 * p.m * p.m * s2) * (3.0 - xi * xi / (2.0 * s2));
}

double quantum_force(const PacketParams& p, double x, double t) {
    const double sigma = spread(p, t);
    const double s4 = sigma * sigma * sigma * sigma;
    return p.hbar * p.hbar * (x - p.u0 * t) / (4.0 * p.m * p.m * s4);
}

double velocity(const PacketParams& p, double x, double t) {
    const double s2 = spread(p, t) * spread(p, t);
    return p.u0 + p.hbar * p.hbar * t / (4.0 * p.m * p.m * p.sigma0 * p.sigma0 * s2) *
                      (x - p.u0 * t);
}

double trajectory(const PacketParams& p, double x0, double t) {
    const double b = p.hbar * t / (2.0 * p.m * p.sigma0 * p.sigma0);
    return p.u0 * t + x0 * std::sqrt(1.0 + b * b);
}

FieldProfile sample_profile(const PacketParams& p, double x_min, double x_max, int n,
                            double t, bool normalized) {
    if (n < 8) throw std::invalid_argument("sample_profile: need n >= 8");
    if (!(x_max > x_min)) throw std::invalid_argument("sample_profile: need x_max > x_min");
    std::vector<double> x = detail::lin_spaced(x_min, x_max, n);
    std::vector<double> rho(x.size()), u(x.size()), q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        rho[i] = fields(p, x[i], t).rho;
        u[i] = velocity(p, x[i], t);
        q[i] = quantum_potential(p, x[i], t);
    }
    if (normalized) {
        const double h = (x_max - x_min) / (n - 1);
        const double mass = detail::trapezoid(rho, h);
        if (!(mass > 0.0)) throw std::invalid_argument("sample_profile: zero mass on grid");
        for (double& r : rho) r /= mass;
    }
    return FieldProfile(std::move(x), std::move(rho), std::move(u), std::move(q), t);
}

} // namespace qshock
