#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qshock/errors.hpp"
#include "qshock/packet.hpp"
#include "qshock/riemann.hpp"

using namespace qshock;

namespace {
const PacketParams ref{1.0, 1.0, 1.0, 10.0};

std::vector<double> log_sweep(double lo, double hi, int n) {
    std::vector<double> out(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        out[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (n - 1));
    return out;
}
}

TEST_CASE("big_f matches the logarithmic closed form for the packet chart") {
    // Q_rho = c/rho makes the integrand c'/rho, so F = c' * ln(rho/rho_ref)
    const double t = 1.0;
    const ChartConfig cfg = gaussian_chart_config(ref, t);
    const double sigma = spread(ref, t);
    const double cprime = ref.hbar / (2.0 * ref.m * sigma);
    for (double rho : log_sweep(1e-3 * cfg.rho_ref, cfg.rho_ref, 24)) {
        const double expected = cprime * std::log(rho / cfg.rho_ref);
        CHECK(std::abs(big_f(cfg, rho) - expected) < 1e-8 * std::max(1.0, std::abs(expected)));
    }
    CHECK(big_f(cfg, cfg.rho_ref) == 0.0);
    CHECK(big_f(cfg, 0.5 * cfg.rho_ref) == doctest::Approx(-0.3099848428288717).epsilon(1e-9));
    CHECK(big_f(cfg, 2.0 * cfg.rho_ref) > 0.0);

    CHECK_THROWS_AS(big_f(cfg, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(big_f(cfg, 0.0), std::invalid_argument);
}

TEST_CASE("big_f is additive across base points") {
    const ChartConfig cfg1 = gaussian_chart_config(ref, 1.0);
    ChartConfig cfg2 = cfg1;
    cfg2.rho_ref = 0.3 * cfg1.rho_ref;
    for (double rho : log_sweep(1e-2 * cfg1.rho_ref, cfg1.rho_ref, 9)) {
        const double via_ref = big_f(cfg1, rho) - big_f(cfg1, cfg2.rho_ref);
        CHECK(via_ref == doctest::Approx(big_f(cfg2, rho)).epsilon(1e-9));
    }
}

TEST_CASE("big_f rejects a negative radicand") {
    ChartConfig cfg;
    cfg.q_rho_of_rho = [](double) { return -1.0; };
    cfg.rho_ref = 1.0;
    CHECK_THROWS_AS(big_f(cfg, 0.5), NegativeRadicand);
}

TEST_CASE("chart tabulation reproduces the quadrature") {
    const ChartConfig cfg = gaussian_chart_config(ref, 1.0);
    const double rho_min = 1e-3 * cfg.rho_ref;
    const double lambda = default_chart_lambda(ref, 1.0, Family::plus);
    const InvariantChart chart = build_chart(cfg, rho_min, lambda, 1.0, 512);

    CHECK(chart.rho_ref() == cfg.rho_ref);
    CHECK(chart.rho_min() == rho_min);
    CHECK(chart.lambda() == lambda);
    CHECK(chart.t() == 1.0);
    CHECK(chart.f_values().back() == 0.0);
    CHECK(chart.F(cfg.rho_ref) == 0.0);

    for (std::size_t i = 1; i < chart.f_values().size(); ++i)
        CHECK(chart.f_values()[i] > chart.f_values()[i - 1]);

    for (double rho : log_sweep(rho_min * 1.01, cfg.rho_ref * 0.99, 40))
        CHECK(std::abs(chart.F(rho) - big_f(cfg, rho)) < 1e-9);

    CHECK_THROWS_AS(chart.F(rho_min * 0.5), std::out_of_range);
    CHECK_THROWS_AS(chart.F(cfg.rho_ref * 1.01), std::out_of_range);
}

TEST_CASE("chart construction guards") {
    const ChartConfig cfg = gaussian_chart_config(ref, 1.0);
    CHECK_THROWS_AS(build_chart(cfg, 2.0 * cfg.rho_ref, 10.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_chart(cfg, 0.5 * cfg.rho_ref, 10.0, 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(InvariantChart({1.0, 2.0, 3.0}, {0.1, 0.2, 0.3}, 10.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(InvariantChart({1.0, 2.0, 2.0, 3.0}, {0.1, 0.2, 0.3, 0.4}, 10.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("invariants round-trip") {
    for (double u : {-3.0, 0.0, 10.0}) {
        for (double f : {-0.7, 0.0, 0.31}) {
            const auto [a, b] = invariants(u, f);
            CHECK(a == u + f);
            CHECK(b == u - f);
            CHECK((a + b) / 2.0 == doctest::Approx(u).epsilon(1e-14));
            CHECK((a - b) / 2.0 == doctest::Approx(f).epsilon(1e-14));
        }
    }
}

TEST_CASE("traveling evaluator differs from the inversion by exactly two") {
    TravelingWave wave;
    wave.A = [](double s) { return 0.3 + 0.1 * std::sin(s); };
    wave.B = [](double s) { return -0.2 + 0.05 * std::cos(s); };
    wave.lambda = 10.5;
    std::vector<double> xs(21);
    for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = -1.0 + 0.1 * static_cast<double>(i);

    const FactorReport report = consistency_factor(wave, xs, 0.3);
    CHECK(report.u_factor == 2.0);
    CHECK(report.f_factor == 2.0);

    const auto direct = wave.eval(0.4, 0.3);
    const auto inverted = wave.eval_inverted(0.4, 0.3);
    CHECK(direct.first == 2.0 * inverted.first);
    CHECK(direct.second == 2.0 * inverted.second);
}

TEST_CASE("consistency factor is NaN when every sample vanishes") {
    TravelingWave wave;
    wave.A = [](double) { return 0.0; };
    wave.B = [](double) { return 0.0; };
    wave.lambda = 1.0;
    const std::vector<double> xs{-1.0, 0.0, 1.0};
    const FactorReport report = consistency_factor(wave, xs, 0.0);
    CHECK(std::isnan(report.u_factor));
    CHECK(std::isnan(report.f_factor));
}

TEST_CASE("one-sided wave advects rigidly") {
    TravelingWave wave;
    wave.A = [](double s) { return std::exp(-s * s); };
    wave.B = [](double) { return 0.0; };
    wave.lambda = 2.5;
    for (double x : {-0.7, 0.0, 1.3}) {
        for (double dt : {0.1, 0.5}) {
            const double before = wave.eval(x, 1.0).first;
            const double after = wave.eval(x - wave.lambda * dt, 1.0 + dt).first;
            CHECK(before == doctest::Approx(after).epsilon(1e-12));
        }
    }
}

TEST_CASE("invariant drift along a characteristic stays small") {
    const ChartConfig cfg = gaussian_chart_config(ref, 1.0);
    const CharacteristicLine line = build_line(ref, -1.0, 0.0, Family::plus, LineMode::paper);
    std::vector<double> ts(33);
    for (std::size_t i = 0; i < ts.size(); ++i)
        ts[i] = 1.0 + 0.2 * static_cast<double>(i) / 32.0;

    const DriftReport report = invariant_drift(ref, line, ts, cfg);
    CHECK(report.t.size() == 33);
    CHECK(report.value.size() == 33);
    CHECK(report.initial == report.value.front());
    CHECK(report.max_drift < 0.1);
    CHECK(report.max_drift > 0.0);

    // first sample recomputed by hand
    const double x1 = line.at(ts.front());
    const double expected =
        velocity(ref, x1, ts.front()) + big_f(cfg, fields(ref, x1, ts.front()).rho);
    CHECK(report.value.front() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("frozen background carries the invariant exactly") {
    const ChartConfig cfg = gaussian_chart_config(ref, 0.0);
    const CharacteristicLine line =
        build_line(ref, -1.0, 0.0, Family::plus, LineMode::paper, false);
    std::vector<double> ts{1.0, 1.05, 1.1, 1.15, 1.2};
    const DriftReport report = invariant_drift(ref, line, ts, cfg, false);
    CHECK(report.max_drift < 1e-12);
}

TEST_CASE("invariant drift input guards") {
    const ChartConfig cfg = gaussian_chart_config(ref, 1.0);
    const CharacteristicLine line = build_line(ref, -1.0, 0.0, Family::plus, LineMode::paper);
    const std::vector<double> one{1.0};
    CHECK_THROWS_AS(invariant_drift(ref, line, one, cfg), std::invalid_argument);
    const std::vector<double> unsorted{1.0, 0.9, 1.1};
    CHECK_THROWS_AS(invariant_drift(ref, line, unsorted, cfg), std::invalid_argument);
}

TEST_CASE("packet chart config pins the peak density and center speeds") {
    const double t = 1.0;
    const ChartConfig cfg = gaussian_chart_config(ref, t);
    CHECK(cfg.rho_ref == fields(ref, ref.u0 * t, t).rho);

    const double sigma = spread(ref, t);
    const double coeff = 1.0 / (4.0 * sigma * sigma);
    CHECK(cfg.q_rho_of_rho(0.01) * 0.01 == doctest::Approx(coeff).epsilon(1e-14));

    const double chi = 1.0 / (2.0 * sigma);
    CHECK(default_chart_lambda(ref, t, Family::plus) ==
          doctest::Approx(10.0 + chi).epsilon(1e-15));
    CHECK(default_chart_lambda(ref, t, Family::minus) ==
          doctest::Approx(10.0 - chi).epsilon(1e-15));
}

TEST_CASE("profile chart reproduces the closed-form relation on the branch") {
    // sample the rising branch left of the peak at t = 0
    const FieldProfile profile = sample_profile(ref, -3.0, 1.0, 257, 0.0);
    const ChartConfig cfg = profile_chart_config(profile);

    // query exactly at tabulated branch nodes: only the stencil error remains
    const double coeff = 0.25; // hbar^2 / (4 m^2 sigma0^2)
    for (std::size_t i : {40u, 96u, 150u}) {
        const double rho_node = profile.rho()[i];
        const double expected = coeff / rho_node;
        CHECK(cfg.q_rho_of_rho(rho_node) == doctest::Approx(expected).epsilon(1e-3));
    }

    CHECK_THROWS_AS(cfg.q_rho_of_rho(cfg.rho_ref * 1.5), std::out_of_range);
    CHECK_THROWS_AS(cfg.q_rho_of_rho(profile.rho().front() * 0.5), std::out_of_range);
}
