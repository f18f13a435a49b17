#include "qshock_cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qshock/characteristics.hpp"
#include "qshock/errors.hpp"
#include "qshock/io.hpp"
#include "qshock/oracle.hpp"
#include "qshock/packet.hpp"
#include "qshock/riemann.hpp"

namespace qshock::cli {

namespace {

namespace fs = std::filesystem;

// Post-parse validation failures; reported like flag errors with exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    double hbar = 1.0;
    double m = 1.0;
    double sigma0 = 1.0;
    double u0 = 10.0;

    std::vector<double> x0;        // empty: per-command default
    std::optional<double> x_min;
    std::optional<double> x_max;
    std::optional<int> n;
    std::optional<double> t;
    double dt = 1e-4;
    double t_max = 0.0;            // <= 0: 100 characteristic times
    double t0_max = 0.0;           // <= 0: 2 characteristic times
    int t0_count = 21;
    int nodes = 2048;
    double rho_decades = 3.0;
    int jobs = 0;                  // <= 0: hardware concurrency

    std::vector<double> sigma0_set{0.5, 1.0, 2.0};
    std::vector<double> u0_set{0.0, 1.0, 10.0};

    std::string family = "both";
    std::string mode = "paper";
    std::string format = "csv";
    std::string output;
};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

LineMode parse_mode(const Options& o) {
    return o.mode == "paper" ? LineMode::paper : LineMode::corrected;
}

std::vector<Family> parse_families(const Options& o) {
    if (o.family == "plus") return {Family::plus};
    if (o.family == "minus") return {Family::minus};
    return {Family::plus, Family::minus};
}

PacketParams parse_params(const Options& o) { return {o.hbar, o.m, o.sigma0, o.u0}; }

std::string stem_for(const Options& o, const std::string& command) {
    return o.output.empty() ? "qshock-" + command : o.output;
}

void ensure_parent(const fs::path& p) {
    const fs::path dir = p.parent_path();
    if (!dir.empty()) fs::create_directories(dir);
}

void emit_table(const Table& table, const Meta& meta, const Options& o,
                const std::string& stem) {
    const fs::path path = stem + "." + o.format;
    ensure_parent(path);
    if (o.format == "csv")
        write_csv(table, path);
    else
        write_json(table, meta, path);
}

void emit_sidecar(const Meta& meta, const std::string& stem) {
    const fs::path path = stem + ".meta.json";
    ensure_parent(path);
    write_sidecar(meta, path);
}

Meta base_meta(const Options& o, const std::string& command) {
    Meta meta;
    meta["command"] = command;
    meta["tool"] = "qshock 1.0.0";
    meta["format"] = o.format;
    meta["mode"] = o.mode;
    meta["hbar"] = format_double(o.hbar);
    meta["m"] = format_double(o.m);
    meta["sigma0"] = format_double(o.sigma0);
    meta["u0"] = format_double(o.u0);
    return meta;
}

struct Grid {
    double x_min;
    double x_max;
    int n;
};

Grid resolve_grid(const Options& o, double def_min, double def_max, int def_n) {
    Grid g{o.x_min.value_or(def_min), o.x_max.value_or(def_max), o.n.value_or(def_n)};
    if (!(g.x_min < g.x_max)) throw UsageError("--x-min must be below --x-max");
    if (g.n < 2) throw UsageError("--n must be at least 2");
    return g;
}

// ---------------------------------------------------------------- fields

int run_fields(const Options& o) {
    const PacketParams p = parse_params(o);
    const Grid g = resolve_grid(o, -10.0, 10.0, 2001);
    const double t = o.t.value_or(0.0);

    const FieldProfile prof = sample_profile(p, g.x_min, g.x_max, g.n, t, false);
    std::vector<double> amp(prof.size()), phase(prof.size()), force(prof.size());
    for (std::size_t i = 0; i < prof.size(); ++i) {
        const PacketFields f = fields(p, prof.x()[i], t);
        amp[i] = f.amplitude;
        phase[i] = f.phase;
        force[i] = quantum_force(p, prof.x()[i], t);
    }

    Table table{"fields",
                {Column{"x", prof.x()}, Column{"amplitude", std::move(amp)},
                 Column{"phase", std::move(phase)}, Column{"rho", prof.rho()},
                 Column{"u", prof.u()}, Column{"q", prof.q()},
                 Column{"force", std::move(force)}}};

    Meta meta = base_meta(o, "fields");
    meta["t"] = format_double(t);
    meta["x_min"] = format_double(g.x_min);
    meta["x_max"] = format_double(g.x_max);
    meta["n"] = std::to_string(g.n);
    meta["sigma"] = format_double(spread(p, t));
    meta["density"] = "verbatim closed form (not unit-normalized)";

    const std::string stem = stem_for(o, "fields");
    emit_table(table, meta, o, stem);
    emit_sidecar(meta, stem);
    return 0;
}

// ---------------------------------------------------------------- fig1

int run_fig1(const Options& o) {
    const PacketParams p = parse_params(o);
    const Grid g = resolve_grid(o, -10.0, 10.0, 2001);
    const double t = o.t.value_or(0.0);

    const std::vector<double> xs = linspace(g.x_min, g.x_max, g.n);
    std::vector<double> force(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) force[i] = quantum_force(p, xs[i], t);

    Table table{"fig1", {Column{"x", xs}, Column{"force", std::move(force)}}};

    Meta meta = base_meta(o, "fig1");
    meta["t"] = format_double(t);
    meta["x_min"] = format_double(g.x_min);
    meta["x_max"] = format_double(g.x_max);
    meta["n"] = std::to_string(g.n);

    const std::string stem = stem_for(o, "fig1");
    emit_table(table, meta, o, stem);
    emit_sidecar(meta, stem);
    return 0;
}

// ---------------------------------------------------------------- characteristics

int run_characteristics(const Options& o) {
    const PacketParams p = parse_params(o);
    const LineMode mode = parse_mode(o);
    const std::vector<Family> fams = parse_families(o);
    const std::vector<double> x0s = o.x0.empty() ? std::vector<double>{-1.0} : o.x0;
    const double t0_max = o.t0_max > 0 ? o.t0_max : 2.0 * p.char_time();
    if (o.t0_count < 2) throw UsageError("--t0-count must be at least 2");
    const std::vector<double> t0s = linspace(0.0, t0_max, o.t0_count);

    std::vector<double> c_x0, c_t0, c_anchor, c_slope, c_intercept;
    std::vector<std::string> c_family;
    for (double x0 : x0s)
        for (Family fam : fams)
            for (double t0 : t0s) {
                const CharacteristicLine line = build_line(p, x0, t0, fam, mode);
                c_x0.push_back(x0);
                c_family.emplace_back(family_name(fam));
                c_t0.push_back(line.t0);
                c_anchor.push_back(line.x_anchor);
                c_slope.push_back(line.slope);
                c_intercept.push_back(line.intercept());
            }

    Table table{"characteristics",
                {Column{"x0", std::move(c_x0)}, Column{"family", std::move(c_family)},
                 Column{"t0", std::move(c_t0)}, Column{"x_anchor", std::move(c_anchor)},
                 Column{"slope", std::move(c_slope)},
                 Column{"intercept", std::move(c_intercept)}}};

    Meta meta = base_meta(o, "characteristics");
    meta["t0_max"] = format_double(t0_max);
    meta["t0_count"] = std::to_string(o.t0_count);

    const std::string stem = stem_for(o, "characteristics");
    emit_table(table, meta, o, stem);
    emit_sidecar(meta, stem);
    return 0;
}

// ---------------------------------------------------------------- shock

// Side-by-side detector table. Rows carry a status instead of aborting:
// "no-root" / "no-crossing" mean the detector ran and found nothing in the
// horizon, which is an answer, not a failure. Hard degeneracies (x0 = 0)
// still propagate as tagged errors.
Table make_shock_table(const PacketParams& p, const std::vector<double>& x0s,
                       const std::vector<Family>& fams, LineMode mode, double t_max) {
    std::vector<double> c_x0, c_ts, c_xs, c_rel;
    std::vector<std::string> c_family, c_method, c_status;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    auto push = [&](double x0, Family fam, const char* method, double ts, double xs,
                    double rel, const char* status) {
        c_x0.push_back(x0);
        c_family.emplace_back(family_name(fam));
        c_method.emplace_back(method);
        c_ts.push_back(ts);
        c_xs.push_back(xs);
        c_rel.push_back(rel);
        c_status.emplace_back(status);
    };

    RootOptions ropt;
    ropt.t_max = t_max;
    CrossingOptions copt;
    copt.t_max = t_max;
    // Crossing times approach the root linearly in the epoch magnitude, so the
    // window sits at 1e-7 characteristic times: bias ~1e-5 relative while the
    // pair slope differences stay above the cancellation noise floor.
    const double delta = 1e-7 * p.char_time();
    const std::vector<double> epochs = linspace(delta, 17.0 * delta, 17);

    for (double x0 : x0s)
        for (Family fam : fams) {
            double t_root = nan;
            double x_root = nan;
            bool have_root = false;
            try {
                const ShockEvent ev = shock_condition_root(p, x0, fam, mode, ropt);
                t_root = ev.t_s;
                x_root = ev.x_s;
                have_root = true;
            } catch (const NoRootInHorizon&) {
            }

            const double t_paper = closed_form_shock_time(p, x0, fam);
            const double x_paper = closed_form_shock_position(p, t_paper, fam);
            push(x0, fam, "paper-formula", t_paper, x_paper,
                 have_root ? std::abs(t_paper - t_root) / std::abs(t_root) : nan, "ok");

            push(x0, fam, "condition-root", t_root, x_root, nan,
                 have_root ? "ok" : "no-root");

            try {
                const ShockEvent ev = first_crossing(p, x0, epochs, fam, mode, copt);
                push(x0, fam, "pairwise-crossing", ev.t_s, ev.x_s,
                     have_root ? std::abs(ev.t_s - t_root) / std::abs(t_root) : nan,
                     "ok");
            } catch (const NoCrossing&) {
                push(x0, fam, "pairwise-crossing", nan, nan, nan, "no-crossing");
            }

            if (p.u0 == 0.0) {
                const double t_zd = zero_drift_shock_time(p, x0);
                const double x_zd = zero_drift_shock_position(p, x0);
                push(x0, fam, "zero-drift", t_zd, x_zd,
                     have_root ? std::abs(t_zd - t_root) / std::abs(t_root) : nan,
                     "reported-only");
            }
        }

    return Table{"shock",
                 {Column{"x0", std::move(c_x0)}, Column{"family", std::move(c_family)},
                  Column{"method", std::move(c_method)}, Column{"t_s", std::move(c_ts)},
                  Column{"x_s", std::move(c_xs)},
                  Column{"rel_diff_t", std::move(c_rel)},
                  Column{"status", std::move(c_status)}}};
}

int run_shock(const Options& o) {
    const PacketParams p = parse_params(o);
    const std::vector<double> x0s = o.x0.empty() ? std::vector<double>{-1.0} : o.x0;
    const Table table = make_shock_table(p, x0s, parse_families(o), parse_mode(o), o.t_max);

    Meta meta = base_meta(o, "shock");
    meta["t_max"] = format_double(o.t_max > 0 ? o.t_max : 100.0 * p.char_time());
    meta["rel_diff_t"] = "per-method |t_s - t_root| / |t_root| vs the condition root";

    const std::string stem = stem_for(o, "shock");
    emit_table(table, meta, o, stem);
    emit_sidecar(meta, stem);
    return 0;
}

// ---------------------------------------------------------------- riemann

int run_riemann(const Options& o) {
    const PacketParams p = parse_params(o);
    const LineMode mode = parse_mode(o);
    // "both" collapses to the plus family here; the chart is single-family.
    const Family fam = o.family == "minus" ? Family::minus : Family::plus;
    const double t = o.t.value_or(1.0);
    const double x0 = o.x0.empty() ? -1.0 : o.x0.front();
    if (o.nodes < 4) throw UsageError("--nodes must be at least 4");
    if (!(o.rho_decades > 0)) throw UsageError("--rho-decades must be positive");

    const ChartConfig cfg = gaussian_chart_config(p, t);
    const double lambda = default_chart_lambda(p, t, fam);
    const double rho_min = cfg.rho_ref * std::pow(10.0, -o.rho_decades);
    const InvariantChart chart = build_chart(cfg, rho_min, lambda, t, o.nodes);

    Table chart_table{"riemann-chart",
                      {Column{"rho", chart.rho_nodes()}, Column{"f", chart.f_values()}}};

    const CharacteristicLine line = build_line(p, x0, 0.0, fam, mode);
    const std::vector<double> samples = linspace(t, t + 0.1 * p.char_time(), 33);
    const DriftReport drift = invariant_drift(p, line, samples, cfg);
    std::vector<double> dev(drift.value.size());
    for (std::size_t i = 0; i < dev.size(); ++i) dev[i] = drift.value[i] - drift.initial;
    Table drift_table{"riemann-drift",
                      {Column{"t", drift.t}, Column{"value", drift.value},
                       Column{"drift", std::move(dev)}}};

    Meta meta = base_meta(o, "riemann");
    meta["t"] = format_double(t);
    meta["family"] = family_name(fam);
    meta["x0"] = format_double(x0);
    meta["lambda"] = format_double(lambda);
    meta["rho_ref"] = format_double(cfg.rho_ref);
    meta["rho_min"] = format_double(rho_min);
    meta["nodes"] = std::to_string(o.nodes);
    meta["drift_initial"] = format_double(drift.initial);
    meta["drift_max"] = format_double(drift.max_drift);

    const std::string stem = stem_for(o, "riemann");
    emit_table(chart_table, meta, o, stem + ".chart");
    emit_table(drift_table, meta, o, stem + ".drift");
    emit_sidecar(meta, stem);
    return 0;
}

// ---------------------------------------------------------------- evolve

int run_evolve(const Options& o) {
    const PacketParams p = parse_params(o);
    const Grid g = resolve_grid(o, -16.0, 36.0, 4096);
    const double t = o.t.value_or(1.0);
    if (!(o.dt > 0)) throw UsageError("--dt must be positive");
    const long long steps = std::llround(t / o.dt);
    if (steps < 0 || std::abs(steps * o.dt - t) > 1e-9 * std::max(1.0, std::abs(t)))
        throw UsageError("--t must be a non-negative integer multiple of --dt");

    const WaveState init =
        make_gaussian_state(p, g.x_min, g.x_max, static_cast<std::size_t>(g.n), true);
    const double norm0 = norm(init);
    const WaveState out = evolve(init, p, {}, o.dt, static_cast<int>(steps));
    const double norm1 = norm(out);
    const ComparisonReport rep = compare_to_analytic(out, p);

    std::vector<double> xs(out.n()), re(out.n()), im(out.n()), rho(out.n());
    for (std::size_t j = 0; j < out.n(); ++j) {
        xs[j] = out.x_at(j);
        re[j] = out.psi[j].real();
        im[j] = out.psi[j].imag();
        rho[j] = std::norm(out.psi[j]);
    }
    Table snapshot{"evolve-snapshot",
                   {Column{"x", std::move(xs)}, Column{"re", std::move(re)},
                    Column{"im", std::move(im)}, Column{"rho", std::move(rho)}}};

    Meta meta = base_meta(o, "evolve");
    meta["t"] = format_double(t);
    meta["dt"] = format_double(o.dt);
    meta["steps"] = std::to_string(steps);
    meta["x_min"] = format_double(g.x_min);
    meta["x_max"] = format_double(g.x_max);
    meta["n"] = std::to_string(g.n);

    Meta report = meta;
    report["region_lo"] = format_double(rep.region_lo);
    report["region_hi"] = format_double(rep.region_hi);
    report["err_rho_linf"] = format_double(rep.err_rho_linf);
    report["err_rho_l2"] = format_double(rep.err_rho_l2);
    report["err_u_linf"] = format_double(rep.err_u_linf);
    report["err_u_l2"] = format_double(rep.err_u_l2);
    report["err_q_raw_linf"] = format_double(rep.err_q_raw_linf);
    report["err_q_offset_linf"] = format_double(rep.err_q_offset_linf);
    report["norm_initial"] = format_double(norm0);
    report["norm_final"] = format_double(norm1);
    report["norm_drift"] = format_double(std::abs(norm1 - norm0));

    const std::string stem = stem_for(o, "evolve");
    emit_table(snapshot, meta, o, stem + ".snapshot");
    ensure_parent(stem + ".report.json");
    write_sidecar(report, stem + ".report.json");
    emit_sidecar(meta, stem);
    return 0;
}

// ---------------------------------------------------------------- sweep

int run_sweep(const Options& o) {
    const std::vector<double> x0set =
        o.x0.empty() ? std::vector<double>{-1.0, -0.5, 0.5, 1.0} : o.x0;
    const std::vector<Family> fams = parse_families(o);
    const LineMode mode = parse_mode(o);

    struct Cell {
        double sigma0, u0, x0;
    };
    std::vector<Cell> cells;
    for (double s : o.sigma0_set)
        for (double u : o.u0_set)
            for (double x : x0set) cells.push_back({s, u, x});
    if (cells.empty()) throw UsageError("sweep sets must be non-empty");

    const std::string stem = stem_for(o, "sweep");
    ensure_parent(stem + ".index." + o.format);

    auto cell_stem = [&](std::size_t i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, ".cell-%03zu", i);
        return stem + buf;
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers =
        std::min<std::size_t>(o.jobs > 0 ? static_cast<std::size_t>(o.jobs) : hw,
                              cells.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            try {
                const Cell& c = cells[i];
                const PacketParams p{o.hbar, o.m, c.sigma0, c.u0};
                const Table table = make_shock_table(p, {c.x0}, fams, mode, o.t_max);
                Meta meta = base_meta(o, "sweep");
                meta["sigma0"] = format_double(c.sigma0);
                meta["u0"] = format_double(c.u0);
                meta["x0"] = format_double(c.x0);
                meta["cell"] = std::to_string(i);
                emit_table(table, meta, o, cell_stem(i));
            } catch (...) {
                std::scoped_lock lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<double> i_cell, i_sigma0, i_u0, i_x0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        i_cell.push_back(static_cast<double>(i));
        i_sigma0.push_back(cells[i].sigma0);
        i_u0.push_back(cells[i].u0);
        i_x0.push_back(cells[i].x0);
    }
    Table index{"sweep-index",
                {Column{"cell", std::move(i_cell)}, Column{"sigma0", std::move(i_sigma0)},
                 Column{"u0", std::move(i_u0)}, Column{"x0", std::move(i_x0)}}};

    Meta meta = base_meta(o, "sweep");
    meta["cells"] = std::to_string(cells.size());
    meta["cell_files"] = stem + ".cell-NNN." + o.format;
    meta["jobs"] = std::to_string(workers);
    emit_table(index, meta, o, stem + ".index");
    emit_sidecar(meta, stem);
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    Options o;
    CLI::App app{"qshock: dispersive hydrodynamics of a free Gaussian wave packet"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file (flags win over file)");
    app.allow_config_extras(false);

    app.add_option("--hbar", o.hbar, "reduced Planck constant")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--m", o.m, "particle mass")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--sigma0", o.sigma0, "initial packet width")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--u0", o.u0, "drift velocity")->capture_default_str();
    app.add_option("--x0", o.x0,
                   "characteristic launch positions (default: command-specific)");
    app.add_option("--x-min", o.x_min, "grid lower edge (default: command-specific)");
    app.add_option("--x-max", o.x_max, "grid upper edge (default: command-specific)");
    app.add_option("--n", o.n, "grid points (default: command-specific)");
    app.add_option("--t", o.t, "evaluation time (default: command-specific)");
    app.add_option("--dt", o.dt, "evolution time step")->capture_default_str();
    app.add_option("--t-max", o.t_max,
                   "shock search horizon; 0 means 100 characteristic times")
        ->capture_default_str();
    app.add_option("--t0-max", o.t0_max,
                   "characteristics: largest launch epoch; 0 means 2 characteristic times")
        ->capture_default_str();
    app.add_option("--t0-count", o.t0_count, "characteristics: number of launch epochs")
        ->capture_default_str();
    app.add_option("--nodes", o.nodes, "riemann: chart node count")->capture_default_str();
    app.add_option("--rho-decades", o.rho_decades,
                   "riemann: chart span below the reference density, in decades")
        ->capture_default_str();
    app.add_option("--jobs", o.jobs, "sweep: worker count; 0 means hardware concurrency")
        ->capture_default_str();
    app.add_option("--sigma0-set", o.sigma0_set, "sweep: packet width values");
    app.add_option("--u0-set", o.u0_set, "sweep: drift velocity values");
    app.add_option("--family", o.family, "characteristic family")
        ->capture_default_str()
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    app.add_option("--mode", o.mode, "epoch composition of the line evaluator")
        ->capture_default_str()
        ->check(CLI::IsMember({"paper", "corrected"}));
    app.add_option("--format", o.format, "artifact format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", o.output,
                   "output stem (default: qshock-<command>); files get role suffixes");

    auto* fields_cmd =
        app.add_subcommand("fields", "sample closed-form packet fields on a grid");
    auto* characteristics_cmd = app.add_subcommand(
        "characteristics", "emit the characteristic line ensemble (t0, anchor, slope)");
    auto* shock_cmd = app.add_subcommand(
        "shock", "run all shock detectors side by side and cross-compare");
    auto* riemann_cmd = app.add_subcommand(
        "riemann", "emit the invariant chart and a drift report along one line");
    auto* evolve_cmd = app.add_subcommand(
        "evolve", "run the split-step reference evolution and the comparison report");
    auto* fig1_cmd = app.add_subcommand(
        "fig1", "emit the quantum-force curve with the reference defaults");
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "cross-product shock analysis; one file per cell plus an index");
    for (auto* sub : {fields_cmd, characteristics_cmd, shock_cmd, riemann_cmd, evolve_cmd,
                      fig1_cmd, sweep_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the offending flag to stderr
        return 1;
    }

    try {
        if (fields_cmd->parsed()) return run_fields(o);
        if (characteristics_cmd->parsed()) return run_characteristics(o);
        if (shock_cmd->parsed()) return run_shock(o);
        if (riemann_cmd->parsed()) return run_riemann(o);
        if (evolve_cmd->parsed()) return run_evolve(o);
        if (fig1_cmd->parsed()) return run_fig1(o);
        if (sweep_cmd->parsed()) return run_sweep(o);
        std::cerr << "usage error: no subcommand given\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const TaggedError& e) {
        std::cerr << e.tag() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qshock::cli
