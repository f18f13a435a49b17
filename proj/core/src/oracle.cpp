#include "qshock/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <fftw3.h>

#include "qshock/errors.hpp"

namespace qshock {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_state(const WaveState& s) {
    if (s.n() < 256 || !is_pow2(s.n()))
        throw std::invalid_argument("WaveState: n must be a power of two >= 256");
    if (!(s.x_max > s.x_min))
        throw std::invalid_argument("WaveState: need x_max > x_min");
}

// The FFTW planner mutates global state; executing a plan is thread-safe as
// long as each plan owns its buffers.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

class SpectralKinetic {
public:
    SpectralKinetic(std::size_t n, double length, const PacketParams& p, double dt)
        : n_(n), buf_(fftw_alloc_complex(n)), phase_(n) {
        if (buf_ == nullptr) throw std::bad_alloc();
        {
            std::lock_guard<std::mutex> lock(planner_mutex());
            fwd_ = fftw_plan_dft_1d(static_cast<int>(n), buf_, buf_, FFTW_FORWARD,
                                    FFTW_ESTIMATE);
            inv_ = fftw_plan_dft_1d(static_cast<int>(n), buf_, buf_, FFTW_BACKWARD,
                                    FFTW_ESTIMATE);
        }
        // Full kinetic step per call: psi_k *= exp(-i hbar k^2 dt / 2m).
        const double dk = 2.0 * std::numbers::pi / length;
        for (std::size_t j = 0; j < n; ++j) {
            const double m = j <= n / 2 ? static_cast<double>(j)
                                        : static_cast<double>(j) - static_cast<double>(n);
            const double k = dk * m;
            const double angle = -p.hbar * k * k * dt / (2.0 * p.m);
            phase_[j] = std::complex<double>(std::cos(angle), std::sin(angle));
        }
    }

    ~SpectralKinetic() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(inv_);
        fftw_free(buf_);
    }

    SpectralKinetic(const SpectralKinetic&) = delete;
    SpectralKinetic& operator=(const SpectralKinetic&) = delete;

    void apply(std::vector<std::complex<double>>& psi) {
        auto* b = reinterpret_cast<std::complex<double>*>(buf_);
        std::copy(psi.begin(), psi.end(), b);
        fftw_execute(fwd_);
        const double scale = 1.0 / static_cast<double>(n_);
        for (std::size_t j = 0; j < n_; ++j) b[j] *= phase_[j] * scale;
        fftw_execute(inv_);
        std::copy(b, b + n_, psi.begin());
    }

private:
    std::size_t n_;
    fftw_complex* buf_;
    std::vector<std::complex<double>> phase_;
    fftw_plan fwd_ = nullptr;
    fftw_plan inv_ = nullptr;
};

void check_guard_band(const std::vector<std::complex<double>>& psi, double edge_fraction,
                      double edge_threshold, int step) {
    const std::size_t n = psi.size();
    const std::size_t band = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                          edge_fraction * static_cast<double>(n)));
    double peak = 0.0;
    for (const auto& c : psi) peak = std::max(peak, std::abs(c));
    const double limit = edge_threshold * peak;
    for (std::size_t j = 0; j < band; ++j) {
        if (std::abs(psi[j]) >= limit || std::abs(psi[n - 1 - j]) >= limit)
            throw BoundaryLeak("wave mass in the guard band at step " + std::to_string(step) +
                               "; enlarge the domain");
    }
}

} // namespace

double norm(const WaveState& state) {
    double sum = 0.0;
    for (const auto& c : state.psi) sum += std::norm(c);
    return sum * state.spacing();
}

WaveState make_gaussian_state(const PacketParams& p, double x_min, double x_max,
                              std::size_t n, bool normalized) {
    WaveState state{std::vector<std::complex<double>>(n), x_min, x_max, 0.0};
    check_state(state);
    for (std::size_t j = 0; j < n; ++j) {
        const PacketFields f = fields(p, state.x_at(j), 0.0);
        const double arg = f.phase / p.hbar; // k x with k = m u0 / hbar
        state.psi[j] = std::polar(f.amplitude, arg);
    }
    if (normalized) {
        const double mass = norm(state);
        if (!(mass > 0.0)) throw std::invalid_argument("make_gaussian_state: zero mass");
        const double scale = 1.0 / std::sqrt(mass);
        for (auto& c : state.psi) c *= scale;
    }
    return state;
}

WaveState evolve(const WaveState& state, const PacketParams& p, std::span<const double> V,
                 double dt, int steps, const EvolveOptions& opt) {
    check_state(state);
    if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");
    if (steps < 0) throw std::invalid_argument("evolve: steps must be nonnegative");
    if (!V.empty() && V.size() != state.n())
        throw std::invalid_argument("evolve: potential samples do not match the grid");

    WaveState out = state;
    check_guard_band(out.psi, opt.edge_fraction, opt.edge_threshold, 0);
    if (steps == 0) return out;

    SpectralKinetic kinetic(out.n(), out.x_max - out.x_min, p, dt);
    std::vector<std::complex<double>> half_pot;
    if (!V.empty()) {
        half_pot.resize(V.size());
        for (std::size_t j = 0; j < V.size(); ++j) {
            const double angle = -V[j] * dt / (2.0 * p.hbar);
            half_pot[j] = std::complex<double>(std::cos(angle), std::sin(angle));
        }
    }

    for (int s = 0; s < steps; ++s) {
        if (!half_pot.empty())
            for (std::size_t j = 0; j < out.psi.size(); ++j) out.psi[j] *= half_pot[j];
        kinetic.apply(out.psi);
        if (!half_pot.empty())
            for (std::size_t j = 0; j < out.psi.size(); ++j) out.psi[j] *= half_pot[j];
        check_guard_band(out.psi, opt.edge_fraction, opt.edge_threshold, s + 1);
    }
    out.t = state.t + dt * steps;
    return out;
}

FieldProfile extract_fields(const WaveState& state, const PacketParams& p,
                            double rho_floor_rel) {
    check_state(state);
    const std::size_t n = state.n();
    const double h = state.spacing();

    std::vector<double> rho(n);
    std::size_t peak = 0;
    for (std::size_t j = 0; j < n; ++j) {
        rho[j] = std::norm(state.psi[j]);
        if (rho[j] > rho[peak]) peak = j;
    }
    const double floor = rho_floor_rel * rho[peak];

    // Contiguous region around the peak with rho above the floor.
    std::size_t lo = peak, hi = peak;
    while (lo > 0 && rho[lo - 1] > floor) --lo;
    while (hi + 1 < n && rho[hi + 1] > floor) ++hi;

    // Phase unwrap outward from the peak; jumps near pi are ambiguous.
    std::vector<double> S(n, 0.0);
    S[peak] = p.hbar * std::arg(state.psi[peak]);
    const double tau = 2.0 * std::numbers::pi;
    auto step_phase = [&](std::size_t from, std::size_t to) {
        double d = std::arg(state.psi[to]) - std::arg(state.psi[from]);
        d -= tau * std::round(d / tau);
        if (std::abs(d) > 0.9 * std::numbers::pi)
            throw PhaseUnwrapAmbiguity("phase jump " + std::to_string(d) +
                                       " rad between adjacent samples; refine the grid");
        S[to] = S[from] + p.hbar * d;
    };
    for (std::size_t j = peak; j > lo; --j) step_phase(j, j - 1);
    for (std::size_t j = peak; j < hi; ++j) step_phase(j, j + 1);

    // Shrink by one so u and Q use central differences only.
    if (hi - lo < 9)
        throw std::invalid_argument("extract_fields: region above the floor is too small");
    const std::size_t begin = lo + 1, end = hi - 1; // inclusive
    const std::size_t count = end - begin + 1;

    std::vector<double> xs(count), rhos(count), us(count), qs(count);
    const double qcoef = -p.hbar * p.hbar / (2.0 * p.m * p.m);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = begin + i;
        xs[i] = state.x_at(j);
        rhos[i] = rho[j];
        us[i] = (S[j + 1] - S[j - 1]) / (2.0 * h * p.m);
        const double r_mid = std::sqrt(rho[j]);
        const double curvature =
            (std::sqrt(rho[j - 1]) - 2.0 * r_mid + std::sqrt(rho[j + 1])) / (h * h);
        qs[i] = qcoef * curvature / r_mid;
    }
    return FieldProfile(std::move(xs), std::move(rhos), std::move(us), std::move(qs),
                        state.t);
}

ComparisonReport compare_to_analytic(const WaveState& state, const PacketParams& p,
                                     double region_floor_rel) {
    check_state(state);
    const std::size_t n = state.n();
    const double h = state.spacing();
    const double t = state.t;

    // Normalize both densities to unit discrete mass before comparing.
    std::vector<double> rho_num(n), rho_ana(n);
    double mass_num = 0.0, mass_ana = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        rho_num[j] = std::norm(state.psi[j]);
        rho_ana[j] = fields(p, state.x_at(j), t).rho;
        mass_num += rho_num[j];
        mass_ana += rho_ana[j];
    }
    mass_num *= h;
    mass_ana *= h;
    if (!(mass_num > 0.0) || !(mass_ana > 0.0))
        throw std::invalid_argument("compare_to_analytic: zero mass");
    for (std::size_t j = 0; j < n; ++j) {
        rho_num[j] /= mass_num;
        rho_ana[j] /= mass_ana;
    }

    ComparisonReport rep{};
    rep.n = n;
    rep.x_min = state.x_min;
    rep.x_max = state.x_max;
    rep.t = t;

    double l2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = std::abs(rho_num[j] - rho_ana[j]);
        rep.err_rho_linf = std::max(rep.err_rho_linf, d);
        l2 += d * d;
    }
    rep.err_rho_l2 = std::sqrt(l2 * h);

    const FieldProfile extracted = extract_fields(state, p, region_floor_rel);
    rep.region_lo = extracted.x().front();
    rep.region_hi = extracted.x().back();
    const double sigma = spread(p, t);
    const double q_offset = p.hbar * p.hbar / (2.0 * p.m * p.m * sigma * sigma);
    double u_l2 = 0.0;
    for (std::size_t i = 0; i < extracted.size(); ++i) {
        const double x = extracted.x()[i];
        const double du = std::abs(extracted.u()[i] - velocity(p, x, t));
        rep.err_u_linf = std::max(rep.err_u_linf, du);
        u_l2 += du * du;
        const double q_closed = quantum_potential(p, x, t);
        rep.err_q_raw_linf =
            std::max(rep.err_q_raw_linf, std::abs(extracted.q()[i] - q_closed));
        rep.err_q_offset_linf = std::max(
            rep.err_q_offset_linf, std::abs(extracted.q()[i] + q_offset - q_closed));
    }
    rep.err_u_l2 = std::sqrt(u_l2 * extracted.spacing());
    return rep;
}

} // namespace qshock
