#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qshock/packet.hpp"

using namespace qshock;

namespace {
const PacketParams ref{1.0, 1.0, 1.0, 10.0};
}

TEST_CASE("params validate their inputs") {
    CHECK_THROWS_AS(PacketParams(0.0, 1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(PacketParams(1.0, -2.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(PacketParams(1.0, 1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(PacketParams(1.0, 1.0, 1.0, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(PacketParams(1.0, 1.0, 1.0, 1.0, std::nan("")),
                    std::invalid_argument);
}

TEST_CASE("carrier wavenumber defaults to m*u0/hbar") {
    CHECK(ref.k == 10.0);
    const PacketParams p{2.0, 3.0, 1.0, 4.0};
    CHECK(p.k == 6.0);
    const PacketParams q{1.0, 1.0, 1.0, 10.0, 0.5};
    CHECK(q.k == 0.5);
    CHECK(ref.char_time() == 2.0);
}

TEST_CASE("spread: frozen value, parity, floor, asymptote") {
    CHECK(spread(ref, 0.0) == 1.0);
    CHECK(spread(ref, 2.0) == doctest::Approx(1.4142135623730951).epsilon(1e-15));
    CHECK(spread(ref, -3.0) == spread(ref, 3.0));
    CHECK(spread(ref, 0.5) >= 1.0);
    // large-t slope hbar/(2 m sigma0)
    CHECK(spread(ref, 1e7) / 1e7 == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("fields: frozen point values at (0,0) and (21,2)") {
    const PacketFields f0 = fields(ref, 0.0, 0.0);
    CHECK(f0.amplitude == doctest::Approx(0.25197943553838076).epsilon(1e-15));
    CHECK(f0.rho == doctest::Approx(0.06349363593424098).epsilon(1e-15));
    CHECK(f0.phase == 0.0);
    CHECK(f0.sigma == 1.0);

    const PacketFields f = fields(ref, 21.0, 2.0);
    CHECK(f.amplitude == doctest::Approx(0.13222263012653118).epsilon(1e-14));
    CHECK(f.phase == doctest::Approx(108.94690275490383).epsilon(1e-14));
    CHECK(f.rho == f.amplitude * f.amplitude); // bit for bit
}

TEST_CASE("quantum potential and force: frozen values and symmetry") {
    CHECK(quantum_potential(ref, 0.0, 0.0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(quantum_potential(ref, 21.0, 2.0) == doctest::Approx(0.34375).epsilon(1e-15));
    CHECK(quantum_force(ref, 1.0, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(quantum_force(ref, 20.0, 2.0) == 0.0); // center is force-free
    // Q even, force odd about the drifting center
    for (double d : {0.3, 1.1, 2.7}) {
        CHECK(quantum_potential(ref, 20.0 + d, 2.0) ==
              doctest::Approx(quantum_potential(ref, 20.0 - d, 2.0)).epsilon(1e-14));
        CHECK(quantum_force(ref, 20.0 + d, 2.0) ==
              doctest::Approx(-quantum_force(ref, 20.0 - d, 2.0)).epsilon(1e-14));
    }
}

TEST_CASE("force is the negative gradient of Q") {
    const double h = 1e-6;
    for (double x : {-2.0, 0.5, 1.0, 3.5}) {
        const double fd =
            -(quantum_potential(ref, x + h, 1.0) - quantum_potential(ref, x - h, 1.0)) /
            (2.0 * h);
        CHECK(quantum_force(ref, x, 1.0) == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("velocity: frozen value, drift limit, phase-gradient consistency") {
    CHECK(velocity(ref, 21.0, 2.0) == doctest::Approx(10.25).epsilon(1e-15));
    CHECK(velocity(ref, -7.3, 0.0) == 10.0); // no dispersion correction at t = 0
    const double h = 1e-6;
    for (double x : {18.0, 20.0, 23.0}) {
        const double fd =
            (fields(ref, x + h, 2.0).phase - fields(ref, x - h, 2.0).phase) /
            (2.0 * h * ref.m);
        CHECK(velocity(ref, x, 2.0) == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("trajectory: seed recovery, frozen value, velocity consistency") {
    CHECK(trajectory(ref, 1.0, 0.0) == 1.0);
    CHECK(trajectory(ref, 1.0, 2.0) == doctest::Approx(21.414213562373096).epsilon(1e-15));
    const double h = 1e-6;
    for (double x0 : {-2.0, -1.0, 1.0, 2.0})
        for (double t : {0.5, 3.0, 7.5}) {
            const double fd =
                (trajectory(ref, x0, t + h) - trajectory(ref, x0, t - h)) / (2.0 * h);
            const double v = velocity(ref, trajectory(ref, x0, t), t);
            CHECK(fd == doctest::Approx(v).epsilon(1e-7));
        }
}

TEST_CASE("sampled profile: grid shape and density normalization") {
    const FieldProfile raw = sample_profile(ref, -8.0, 8.0, 1001, 0.0, false);
    CHECK(raw.size() == 1001);
    CHECK(raw.x().front() == -8.0);
    CHECK(raw.x().back() == 8.0);
    CHECK(raw.t() == 0.0);

    // verbatim density carries a three-halves-power prefactor; its 1D mass is
    // (2 pi sigma^2)^(-1) instead of 1
    double mass = 0.5 * (raw.rho().front() + raw.rho().back());
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) mass += raw.rho()[i];
    mass *= raw.spacing();
    CHECK(mass == doctest::Approx(0.15915494309189535).epsilon(1e-12));

    const FieldProfile unit = sample_profile(ref, -8.0, 8.0, 1001, 0.0, true);
    double unit_mass = 0.5 * (unit.rho().front() + unit.rho().back());
    for (std::size_t i = 1; i + 1 < unit.size(); ++i) unit_mass += unit.rho()[i];
    unit_mass *= unit.spacing();
    CHECK(unit_mass == doctest::Approx(1.0).epsilon(1e-13));

    // normalization rescales rho only
    for (std::size_t i = 0; i < raw.size(); i += 100) {
        CHECK(unit.u()[i] == raw.u()[i]);
        CHECK(unit.q()[i] == raw.q()[i]);
    }
}

TEST_CASE("profile accepts uniform grids far from the origin") {
    // node rounding is a few ulps of |x|, which dwarfs 1e-12 of a fine spacing
    // once the window sits at large coordinates; the ctor must tolerate it
    const double sigma = spread(ref, 5.0);
    const double center = ref.u0 * 5.0;
    const FieldProfile far =
        sample_profile(ref, center - 2.0 * sigma, center + 2.0 * sigma, 4096, 5.0);
    CHECK(far.size() == 4096);

    // a genuinely warped grid still gets rejected
    std::vector<double> x(64), z(64, 1.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = 50.0 + 0.001 * static_cast<double>(i) + (i == 30 ? 1e-7 : 0.0);
    CHECK_THROWS_AS(FieldProfile(x, z, z, z, 0.0), std::invalid_argument);
}
