#include "qshock/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

// fpclassify must precede pchip so boost::math::isnan is visible to it
#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qshock/errors.hpp"
#include "qshock/quasilinear.hpp"
#include "numerics.hpp"

namespace qshock {

namespace {

using Quadrature = boost::math::quadrature::gauss_kronrod<double, 15>;

double radicand_checked(const ChartConfig& cfg, double rho) {
    const double ratio = cfg.q_rho_of_rho(rho) / rho;
    if (ratio < 0.0)
        throw NegativeRadicand("Q_rho/rho = " + std::to_string(ratio) + " at rho = " +
                               std::to_string(rho));
    return std::sqrt(ratio);
}

} // namespace

double big_f(const ChartConfig& cfg, double rho) {
    if (!(rho > 0.0) || !(cfg.rho_ref > 0.0))
        throw std::invalid_argument("big_f: densities must be positive");
    if (rho == cfg.rho_ref) return 0.0;
    auto integrand = [&](double r) { return radicand_checked(cfg, r); };
    const double lo = std::min(rho, cfg.rho_ref);
    const double hi = std::max(rho, cfg.rho_ref);
    const double magnitude = Quadrature::integrate(integrand, lo, hi, 15, cfg.abs_tol);
    return rho > cfg.rho_ref ? magnitude : -magnitude;
}

InvariantChart::InvariantChart(std::vector<double> rho_nodes, std::vector<double> f_values,
                               double lambda, double t)
    : rho_nodes_(std::move(rho_nodes)), f_values_(std::move(f_values)), lambda_(lambda),
      t_(t) {
    if (rho_nodes_.size() != f_values_.size() || rho_nodes_.size() < 4)
        throw std::invalid_argument("InvariantChart: need >= 4 matching nodes");
    std::vector<double> s(rho_nodes_.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(rho_nodes_[i] > 0.0) || (i > 0 && rho_nodes_[i] <= rho_nodes_[i - 1]))
            throw std::invalid_argument("InvariantChart: nodes must be positive ascending");
        s[i] = std::log(rho_nodes_[i]);
    }
    auto spline = std::make_shared<boost::math::interpolators::pchip<std::vector<double>>>(
        std::move(s), std::vector<double>(f_values_));
    interp_ = [spline](double log_rho) { return (*spline)(log_rho); };
}

double InvariantChart::F(double rho) const {
    if (rho == rho_ref()) return 0.0; // pinned exactly
    if (!(rho >= rho_min()) || !(rho <= rho_ref()))
        throw std::out_of_range("InvariantChart::F: rho outside tabulated range");
    return interp_(std::log(rho));
}

InvariantChart build_chart(const ChartConfig& cfg, double rho_min, double lambda, double t,
                           int n_nodes) {
    if (!(rho_min > 0.0) || !(rho_min < cfg.rho_ref))
        throw std::invalid_argument("build_chart: need 0 < rho_min < rho_ref");
    if (n_nodes < 4) throw std::invalid_argument("build_chart: need >= 4 nodes");
    std::vector<double> nodes = detail::log_spaced(rho_min, cfg.rho_ref, n_nodes);
    std::vector<double> values(nodes.size());
    auto integrand = [&](double r) { return radicand_checked(cfg, r); };
    const double seg_tol = std::max(cfg.abs_tol / n_nodes, 1e-14);
    values.back() = 0.0;
    for (std::size_t k = nodes.size() - 1; k-- > 0;) {
        const double seg = Quadrature::integrate(integrand, nodes[k], nodes[k + 1], 10, seg_tol);
        values[k] = values[k + 1] - seg;
    }
    return InvariantChart(std::move(nodes), std::move(values), lambda, t);
}

std::pair<double, double> invariants(double u, double F) noexcept {
    return {u + F, u - F};
}

std::pair<double, double> TravelingWave::eval(double x, double t) const {
    const double a = A(x + lambda * t);
    const double b = B(x - lambda * t);
    return {a + b, a - b};
}

std::pair<double, double> TravelingWave::eval_inverted(double x, double t) const {
    const double a = A(x + lambda * t);
    const double b = B(x - lambda * t);
    return {(a + b) / 2.0, (a - b) / 2.0};
}

FactorReport consistency_factor(const TravelingWave& wave, std::span<const double> xs,
                                double t) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    FactorReport report{nan, nan};
    for (double x : xs) {
        const auto direct = wave.eval(x, t);
        const auto inverted = wave.eval_inverted(x, t);
        if (std::isnan(report.u_factor) && inverted.first != 0.0)
            report.u_factor = direct.first / inverted.first;
        if (std::isnan(report.f_factor) && inverted.second != 0.0)
            report.f_factor = direct.second / inverted.second;
    }
    return report;
}

DriftReport invariant_drift(const PacketParams& p, const CharacteristicLine& line,
                            std::span<const double> t_samples, const ChartConfig& cfg,
                            bool dispersive) {
    if (t_samples.size() < 2)
        throw std::invalid_argument("invariant_drift: need at least 2 samples");
    for (std::size_t i = 1; i < t_samples.size(); ++i)
        if (!(t_samples[i] > t_samples[i - 1]))
            throw std::invalid_argument("invariant_drift: samples must be strictly increasing");

    const double sign = family_sign(line.family);
    DriftReport report;
    report.t.assign(t_samples.begin(), t_samples.end());
    report.value.reserve(t_samples.size());
    for (double t : t_samples) {
        const double x = line.at(t);
        double u_here, rho_here;
        if (dispersive) {
            u_here = velocity(p, x, t);
            rho_here = fields(p, x, t).rho;
        } else {
            // Frozen packet: the profile rides along at the drift speed.
            u_here = p.u0;
            rho_here = fields(p, x - p.u0 * t, 0.0).rho;
        }
        report.value.push_back(u_here + sign * big_f(cfg, rho_here));
    }
    report.initial = report.value.front();
    report.max_drift = 0.0;
    for (double v : report.value)
        report.max_drift = std::max(report.max_drift, std::abs(v - report.initial));
    return report;
}

ChartConfig gaussian_chart_config(const PacketParams& p, double t) {
    const double sigma = spread(p, t);
    const double coeff = p.hbar * p.hbar / (4.0 * p.m * p.m * sigma * sigma);
    ChartConfig cfg;
    cfg.q_rho_of_rho = [coeff](double rho) { return coeff / rho; };
    cfg.rho_ref = fields(p, p.u0 * t, t).rho; // verbatim peak density
    return cfg;
}

double default_chart_lambda(const PacketParams& p, double t, Family family) {
    const double chi = p.hbar / (2.0 * p.m * spread(p, t));
    return p.u0 + family_sign(family) * chi;
}

ChartConfig profile_chart_config(const FieldProfile& profile) {
    const auto& rho = profile.rho();
    const std::size_t peak =
        static_cast<std::size_t>(std::max_element(rho.begin(), rho.end()) - rho.begin());
    if (peak < 3)
        throw std::invalid_argument("profile_chart_config: increasing branch too short");
    // Pointwise ratios on the strictly increasing branch left of the peak.
    std::vector<double> r_branch, q_branch;
    for (std::size_t i = 1; i < peak; ++i) {
        r_branch.push_back(rho[i]);
        q_branch.push_back(q_rho(profile, i));
    }
    if (r_branch.size() < 2)
        throw std::invalid_argument("profile_chart_config: increasing branch too short");
    for (std::size_t i = 1; i < r_branch.size(); ++i)
        if (!(r_branch[i] > r_branch[i - 1]))
            throw std::invalid_argument("profile_chart_config: density branch not increasing");

    auto table = std::make_shared<std::pair<std::vector<double>, std::vector<double>>>(
        std::move(r_branch), std::move(q_branch));
    ChartConfig cfg;
    cfg.rho_ref = table->first.back();
    cfg.q_rho_of_rho = [table](double rho_query) {
        const auto& r = table->first;
        const auto& q = table->second;
        if (!(rho_query >= r.front()) || !(rho_query <= r.back()))
            throw std::out_of_range("profile chart: rho outside tabulated branch");
        const auto it = std::upper_bound(r.begin(), r.end(), rho_query);
        const std::size_t hi = std::min<std::size_t>(
            static_cast<std::size_t>(it - r.begin()), r.size() - 1);
        const std::size_t lo = hi == 0 ? 0 : hi - 1;
        if (hi == lo) return q[lo];
        const double w = (rho_query - r[lo]) / (r[hi] - r[lo]);
        return q[lo] + w * (q[hi] - q[lo]);
    };
    return cfg;
}

} // namespace qshock
