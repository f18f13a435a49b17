#include <benchmark/benchmark.h>

#include <vector>

#include "qshock/characteristics.hpp"
#include "qshock/oracle.hpp"
#include "qshock/packet.hpp"
#include "qshock/quasilinear.hpp"
#include "qshock/riemann.hpp"

namespace {

const qshock::PacketParams ref{1.0, 1.0, 1.0, 10.0};

void BM_PacketFields(benchmark::State& state) {
    double x = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qshock::fields(ref, x, 1.0));
        x += 1e-6;
    }
}
BENCHMARK(BM_PacketFields);

void BM_SampleProfile(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qshock::sample_profile(ref, -10.0, 10.0, n, 1.0));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleProfile)->Arg(1024)->Arg(4096);

void BM_PointwiseRatio(benchmark::State& state) {
    const qshock::FieldProfile prof = qshock::sample_profile(ref, 8.0, 12.0, 4096, 1.0);
    std::size_t i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qshock::q_rho(prof, i));
        if (++i + 1 >= prof.size()) i = 1;
    }
}
BENCHMARK(BM_PointwiseRatio);

void BM_ConditionRoot(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qshock::shock_condition_root(
            ref, -1.0, qshock::Family::plus, qshock::LineMode::paper));
    }
}
BENCHMARK(BM_ConditionRoot);

void BM_FirstCrossing(benchmark::State& state) {
    const double delta = 1e-7 * ref.char_time();
    std::vector<double> epochs(17);
    for (std::size_t i = 0; i < epochs.size(); ++i)
        epochs[i] = delta * static_cast<double>(i + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qshock::first_crossing(
            ref, -1.0, epochs, qshock::Family::plus, qshock::LineMode::paper));
    }
}
BENCHMARK(BM_FirstCrossing);

void BM_InvariantQuadrature(benchmark::State& state) {
    const qshock::ChartConfig cfg = qshock::gaussian_chart_config(ref, 1.0);
    double frac = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qshock::big_f(cfg, frac * cfg.rho_ref));
        frac = frac > 0.9 ? 0.5 : frac + 1e-4;
    }
}
BENCHMARK(BM_InvariantQuadrature);

void BM_ChartBuild(benchmark::State& state) {
    const qshock::ChartConfig cfg = qshock::gaussian_chart_config(ref, 1.0);
    const double lambda = qshock::default_chart_lambda(ref, 1.0, qshock::Family::plus);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qshock::build_chart(cfg, 1e-3 * cfg.rho_ref, lambda, 1.0, 512));
    }
}
BENCHMARK(BM_ChartBuild);

void BM_SplitStep(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const qshock::WaveState init = qshock::make_gaussian_state(ref, -16.0, 36.0, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qshock::evolve(init, ref, {}, 1e-4, 10));
    }
    state.SetItemsProcessed(state.iterations() * 10);
}
BENCHMARK(BM_SplitStep)->Arg(1024)->Arg(4096);

void BM_ExtractFields(benchmark::State& state) {
    const qshock::WaveState data = qshock::make_gaussian_state(ref, -16.0, 36.0, 4096);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qshock::extract_fields(data, ref));
    }
}
BENCHMARK(BM_ExtractFields);

} // namespace

BENCHMARK_MAIN();
