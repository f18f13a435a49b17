#pragma once

#include <span>
#include <string>

#include "qshock/packet.hpp"

namespace qshock {

enum class Family { plus, minus };

inline double family_sign(Family f) noexcept { return f == Family::plus ? 1.0 : -1.0; }
inline const char* family_name(Family f) noexcept { return f == Family::plus ? "plus" : "minus"; }

/// Epoch composition of the line evaluator.
///  paper:     X(t) = anchor + slope * (t + t0)  (the convention the
///             closed-form shock time/position assume)
///  corrected: X(t) = anchor + slope * (t - t0)  (standard launch-epoch form)
enum class LineMode { paper, corrected };

inline const char* mode_name(LineMode m) noexcept {
    return m == LineMode::paper ? "paper" : "corrected";
}

/// One member of the C+/C- family: launched at epoch t0 from the trajectory
/// seeded at x0, with slope u +/- sqrt(rho*Q_rho) evaluated at the anchor.
struct CharacteristicLine {
    double t0;
    double x_anchor;
    double slope;
    Family family;
    LineMode mode;

    /// Line position at time t. Recovers x_anchor exactly at t = -t0 (paper
    /// mode) and t = t0 (corrected mode): the epoch offset cancels to 0.0.
    double at(double t) const noexcept {
        return x_anchor + slope * (mode == LineMode::paper ? t + t0 : t - t0);
    }

    /// Value at t = 0, useful for pairwise intersection algebra.
    double intercept() const noexcept {
        return x_anchor + slope * (mode == LineMode::paper ? t0 : -t0);
    }
};

/// Detected or predicted shock. method identifies the detector:
/// "paper-formula" (closed-form evaluation), "condition-root" (numeric root of
/// the launch-epoch derivative), or "pairwise-crossing" (brute-force line
/// intersection).
struct ShockEvent {
    double t_s;
    double x_s;
    Family family;
    std::string method;
    PacketParams params;
    double x0;
};

/// Characteristic line through the trajectory point x(t0). With dispersive =
/// false the quantum terms are switched off: anchor = u0*t0 + x0, slope = u0
/// (every line is then a parallel translate and no shock can form).
CharacteristicLine build_line(const PacketParams& p, double x0, double t0, Family family,
                              LineMode mode, bool dispersive = true);

/// d X(t, t0)/d t0 at t0 = 0, by second-order central differences with step
/// delta_t0 = 1e-5 * max(1, sigma0^2 m / hbar). Its root in t is the shock.
double condition_derivative(const PacketParams& p, double x0, double t, Family family,
                            LineMode mode, bool dispersive = true);

struct RootOptions {
    double t_max = 0.0;    // <= 0: 100 characteristic times (100 * 2 m sigma0^2 / hbar)
    int scan_samples = 1024; // log-spaced over (t_max*1e-6, t_max]
    double rel_tol = 1e-10;
    bool dispersive = true;
};

/// Root of the shock condition in t in (0, T_max], by bracketing the sign
/// change on a log-spaced scan and bisecting. Throws DegenerateLaunch when
/// x0 = 0 and NoRootInHorizon when no sign change exists in the horizon.
ShockEvent shock_condition_root(const PacketParams& p, double x0, Family family,
                                LineMode mode, const RootOptions& opt = {});

/// Closed-form shock time, evaluated verbatim including its literal radical
/// sqrt(hbar^2 / 16 sigma0^3): t_s = (-8 m^2 sigma0^4 / hbar^2 x0) * (u0 +/- radical).
/// The expression is dimensionally inconsistent as published; it is reproduced
/// unmodified and cross-compared against the numeric detectors, never patched.
double closed_form_shock_time(const PacketParams& p, double x0, Family family);

/// Closed-form shock position x_s = (u0 +/- sqrt(hbar^2 / 4 sigma0^3)) * t_s (verbatim).
double closed_form_shock_position(const PacketParams& p, double t_s, Family family);

/// Special-case shock time for zero drift (u0 = 0), a separate reported-only
/// formula: t_s = sqrt(4 m^2 sigma0^13 / hbar^2 x0^2). It does not follow from
/// the general closed form at u0 = 0; emitted flagged, never asserted.
double zero_drift_shock_time(const PacketParams& p, double x0);

/// Companion position x_s = sqrt(m^2 sigma0^10 / x0^2) (reported-only).
double zero_drift_shock_position(const PacketParams& p, double x0);

struct CrossingOptions {
    double t_max = 0.0;    // <= 0: 100 characteristic times
    int refine_rounds = 2; // densify around the minimizing pair
    int refine_factor = 8;
    bool dispersive = true;
};

/// Brute-force detector: build one characteristic per launch epoch along the
/// trajectory seeded at x0, intersect all pairs analytically, keep crossings
/// with 0 < t <= T_max and return the earliest; then densify launch epochs
/// around the minimizing pair (refine_rounds rounds, x refine_factor density).
/// Coincident and parallel lines are excluded. Throws NoCrossing when nothing
/// lands in (0, T_max].
ShockEvent first_crossing(const PacketParams& p, double x0,
                          std::span<const double> launch_epochs, Family family,
                          LineMode mode, const CrossingOptions& opt = {});

} // namespace qshock
