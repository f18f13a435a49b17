#include "qshock/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qshock/errors.hpp"
#include "numerics.hpp"

namespace qshock {

CharacteristicLine build_line(const PacketParams& p, double x0, double t0, Family family,
                              LineMode mode, bool dispersive) {
    if (!dispersive)
        return CharacteristicLine{t0, p.u0 * t0 + x0, p.u0, family, mode};
    const double anchor = trajectory(p, x0, t0);
    // For the Gaussian, sqrt(rho*Q_rho) reduces to hbar / (2 m sigma(t0)).
    const double chi = p.hbar / (2.0 * p.m * spread(p, t0));
    const double slope = velocity(p, anchor, t0) + family_sign(family) * chi;
    return CharacteristicLine{t0, anchor, slope, family, mode};
}

double condition_derivative(const PacketParams& p, double x0, double t, Family family,
                            LineMode mode, bool dispersive) {
    const double delta = 1e-5 * std::max(1.0, p.sigma0 * p.sigma0 * p.m / p.hbar);
    const double hi = build_line(p, x0, delta, family, mode, dispersive).at(t);
    const double lo = build_line(p, x0, -delta, family, mode, dispersive).at(t);
    return (hi - lo) / (2.0 * delta);
}

namespace {

double default_horizon(const PacketParams& p, double t_max) {
    return t_max > 0.0 ? t_max : 100.0 * p.char_time();
}

} // namespace

ShockEvent shock_condition_root(const PacketParams& p, double x0, Family family,
                                LineMode mode, const RootOptions& opt) {
    if (x0 == 0.0)
        throw DegenerateLaunch("x0 = 0 seeds the self-similar center line");
    if (opt.scan_samples < 2)
        throw std::invalid_argument("shock_condition_root: need at least 2 scan samples");
    const double horizon = default_horizon(p, opt.t_max);
    auto f = [&](double t) {
        return condition_derivative(p, x0, t, family, mode, opt.dispersive);
    };
    const std::vector<double> ts =
        detail::log_spaced(horizon * 1e-6, horizon, opt.scan_samples);
    double prev_t = ts[0];
    double prev_f = f(prev_t);
    for (std::size_t j = 1; j < ts.size(); ++j) {
        const double cur_t = ts[j];
        const double cur_f = f(cur_t);
        if ((prev_f < 0.0 && cur_f > 0.0) || (prev_f > 0.0 && cur_f < 0.0)) {
            const double t_s = detail::bisect(f, prev_t, cur_t, prev_f, opt.rel_tol);
            const double x_s = build_line(p, x0, 0.0, family, mode, opt.dispersive).at(t_s);
            return ShockEvent{t_s, x_s, family, "condition-root", p, x0};
        }
        prev_t = cur_t;
        prev_f = cur_f;
    }
    throw NoRootInHorizon("no sign change of the shock condition in (0, " +
                          std::to_string(horizon) + "]");
}

double closed_form_shock_time(const PacketParams& p, double x0, Family family) {
    if (x0 == 0.0)
        throw DegenerateLaunch("x0 = 0 seeds the self-similar center line");
    const double radical =
        std::sqrt(p.hbar * p.hbar / (16.0 * p.sigma0 * p.sigma0 * p.sigma0));
    const double prefactor = -8.0 * p.m * p.m * std::pow(p.sigma0, 4) / (p.hbar * p.hbar * x0);
    return prefactor * (p.u0 + family_sign(family) * radical);
}

double closed_form_shock_position(const PacketParams& p, double t_s, Family family) {
    const double radical =
        std::sqrt(p.hbar * p.hbar / (4.0 * p.sigma0 * p.sigma0 * p.sigma0));
    return (p.u0 + family_sign(family) * radical) * t_s;
}

double zero_drift_shock_time(const PacketParams& p, double x0) {
    if (x0 == 0.0)
        throw DegenerateLaunch("x0 = 0 seeds the self-similar center line");
    return std::sqrt(4.0 * p.m * p.m * std::pow(p.sigma0, 13) / (p.hbar * p.hbar * x0 * x0));
}

double zero_drift_shock_position(const PacketParams& p, double x0) {
    if (x0 == 0.0)
        throw DegenerateLaunch("x0 = 0 seeds the self-similar center line");
    return std::sqrt(p.m * p.m * std::pow(p.sigma0, 10) / (x0 * x0));
}

namespace {

struct Crossing {
    double t = std::numeric_limits<double>::infinity();
    std::size_t i = 0, j = 0;
    bool found = false;
};

// Earliest pairwise intersection among the lines, within (0, horizon].
// Coincident epochs and parallel lines are skipped, as are pairs whose
// crossing time is noise-dominated: t = dc/ds inherits rounding of the
// intercepts and slopes amplified by 1/|ds|, and taking the minimum over
// many such pairs would harvest the most negative noise excursion.
Crossing earliest_crossing(const std::vector<CharacteristicLine>& lines, double horizon) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    Crossing best;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].t0 == lines[j].t0) continue;
            const double ds = lines[i].slope - lines[j].slope;
            if (ds == 0.0) continue;
            const double ci = lines[i].intercept();
            const double cj = lines[j].intercept();
            const double t = (cj - ci) / ds;
            const double noise =
                8.0 * eps *
                (std::abs(ci) + std::abs(cj) +
                 std::abs(t) * (std::abs(lines[i].slope) + std::abs(lines[j].slope))) /
                std::abs(ds);
            if (noise > 1e-6 * std::abs(t)) continue;
            if (t > 0.0 && t <= horizon && t < best.t) {
                best = Crossing{t, i, j, true};
            }
        }
    }
    return best;
}

std::vector<CharacteristicLine> lines_for(const PacketParams& p, double x0,
                                          const std::vector<double>& epochs, Family family,
                                          LineMode mode, bool dispersive) {
    std::vector<CharacteristicLine> lines;
    lines.reserve(epochs.size());
    for (double t0 : epochs) lines.push_back(build_line(p, x0, t0, family, mode, dispersive));
    return lines;
}

} // namespace

ShockEvent first_crossing(const PacketParams& p, double x0,
                          std::span<const double> launch_epochs, Family family,
                          LineMode mode, const CrossingOptions& opt) {
    if (launch_epochs.size() < 2)
        throw std::invalid_argument("first_crossing: need at least 2 launch epochs");
    const double horizon = default_horizon(p, opt.t_max);
    if (!(horizon > 0.0)) throw std::invalid_argument("first_crossing: T_max must be positive");

    std::vector<double> epochs(launch_epochs.begin(), launch_epochs.end());
    std::vector<CharacteristicLine> lines =
        lines_for(p, x0, epochs, family, mode, opt.dispersive);
    Crossing best = earliest_crossing(lines, horizon);
    if (!best.found)
        throw NoCrossing("no pairwise intersection in (0, " + std::to_string(horizon) + "]");

    for (int round = 0; round < opt.refine_rounds; ++round) {
        const double a = std::min(lines[best.i].t0, lines[best.j].t0);
        const double b = std::max(lines[best.i].t0, lines[best.j].t0);
        std::vector<double> dense = detail::lin_spaced(a, b, opt.refine_factor + 1);
        std::vector<CharacteristicLine> refined =
            lines_for(p, x0, dense, family, mode, opt.dispersive);
        const Crossing candidate = earliest_crossing(refined, horizon);
        if (!candidate.found) break; // keep the coarser minimum
        lines = std::move(refined);
        best = candidate;
    }

    const double t_s = best.t;
    const double x_s = lines[best.i].at(t_s);
    return ShockEvent{t_s, x_s, family, "pairwise-crossing", p, x0};
}

} // namespace qshock
