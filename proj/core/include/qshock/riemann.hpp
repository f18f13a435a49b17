#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qshock/characteristics.hpp"
#include "qshock/packet.hpp"
#include "qshock/profile.hpp"

namespace qshock {

/// Frozen-time relation rho -> Q_rho plus the quadrature base point.
/// F is defined only up to a constant; the chart pins F(rho_ref) = 0.
struct ChartConfig {
    std::function<double(double)> q_rho_of_rho;
    double rho_ref;
    double abs_tol = 1e-10;
};

/// F(rho) = integral of sqrt(Q_rho / rho) d rho from rho_ref to rho, by
/// adaptive quadrature to the configured absolute tolerance. Signed: negative
/// for rho < rho_ref. Throws NegativeRadicand when Q_rho/rho < 0 anywhere on
/// the integration path.
double big_f(const ChartConfig& cfg, double rho);

/// Tabulated F on log-spaced density nodes with monotone cubic interpolation.
/// Queries outside [rho_min, rho_ref] throw std::out_of_range.
class InvariantChart {
public:
    InvariantChart(std::vector<double> rho_nodes, std::vector<double> f_values,
                   double lambda, double t);

    double F(double rho) const;

    double rho_ref() const noexcept { return rho_nodes_.back(); }
    double rho_min() const noexcept { return rho_nodes_.front(); }
    double lambda() const noexcept { return lambda_; }
    double t() const noexcept { return t_; }
    const std::vector<double>& rho_nodes() const noexcept { return rho_nodes_; }
    const std::vector<double>& f_values() const noexcept { return f_values_; }

private:
    std::vector<double> rho_nodes_; // ascending, last node is rho_ref
    std::vector<double> f_values_;  // f_values.back() == 0 exactly
    double lambda_;
    double t_;
    std::function<double(double)> interp_; // monotone cubic on log(rho)
};

/// Build a chart over [rho_min, cfg.rho_ref] with n_nodes log-spaced nodes
/// (cumulative segment quadrature, so F(rho_ref) = 0 lands exactly on a node).
/// lambda is the frozen wave speed recorded for the x +/- lambda*t coordinates.
InvariantChart build_chart(const ChartConfig& cfg, double rho_min, double lambda, double t,
                           int n_nodes = 2048);

/// Riemann invariants (A, B) = (u + F, u - F).
std::pair<double, double> invariants(double u, double F) noexcept;

/// Traveling reconstruction from invariant profiles A and B.
struct TravelingWave {
    std::function<double(double)> A;
    std::function<double(double)> B;
    double lambda;

    /// Verbatim evaluator: u = A(x + lambda t) + B(x - lambda t), F = A - B.
    std::pair<double, double> eval(double x, double t) const;

    /// Inversion implied by the invariant definitions themselves:
    /// u = (A + B)/2, F = (A - B)/2. Differs from eval by exactly a factor 2.
    std::pair<double, double> eval_inverted(double x, double t) const;
};

/// Ratio eval/eval_inverted sampled over xs at time t, reported for both
/// outputs. The division by two is exact in binary floating point, so the
/// factor is exactly 2 wherever the denominators are nonzero; NaN when every
/// sample vanishes.
struct FactorReport {
    double u_factor;
    double f_factor;
};
FactorReport consistency_factor(const TravelingWave& wave, std::span<const double> xs,
                                double t);

/// Invariant value u +/- F tracked along one characteristic line.
struct DriftReport {
    double initial;
    std::vector<double> t;
    std::vector<double> value;    // u + F (plus family) or u - F (minus family)
    double max_drift;             // max |value - initial|
};

/// Evaluate the line's own invariant at each sample time: u from the velocity
/// field at (X(t), t), F from quadrature of the frozen chart relation at the
/// verbatim closed-form density there. dispersive = false freezes the packet
/// (constant-state background: zero drift). t_samples must be strictly
/// increasing. Propagates NegativeRadicand.
DriftReport invariant_drift(const PacketParams& p, const CharacteristicLine& line,
                            std::span<const double> t_samples, const ChartConfig& cfg,
                            bool dispersive = true);

/// Chart relation for the packet frozen at time t: Q_rho(rho) =
/// hbar^2 / (4 m^2 sigma(t)^2 rho), rho_ref = verbatim peak density at t.
ChartConfig gaussian_chart_config(const PacketParams& p, double t);

/// Frozen wave speed at the packet center at time t for the given family.
double default_chart_lambda(const PacketParams& p, double t, Family family);

/// Chart relation tabulated from a sampled profile's strictly increasing
/// density branch (left of the peak). Queries outside the branch's density
/// range throw std::out_of_range.
ChartConfig profile_chart_config(const FieldProfile& profile);

} // namespace qshock
