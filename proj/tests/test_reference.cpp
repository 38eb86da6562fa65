#include <catch_amalgamated.hpp>

#include "test_helpers.hpp"

#include <vpdlr/config.hpp>
#include <vpdlr/diagnostics.hpp>
#include <vpdlr/integrators.hpp>
#include <vpdlr/reference.hpp>
#include <vpdlr/scenarios.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace vpdlr;
using testing_util::max_abs;

namespace {

const double pi = std::numbers::pi;

full_grid_state initial_full(scenario_kind kind, int n) {
    run_config c;
    c.scenario = kind;
    c.stepper = stepper_choice::reference;
    c.nx = c.nv = n;
    return build_initial_full(c);
}

double mass(const full_grid_state& s) { return quadrature(s.xgrid, moments_full(s).rho); }

struct series {
    std::vector<double> t, ee;
};

series reference_series(scenario_kind kind, int n, double tau, double t_final, int stride = 1) {
    series out;
    run_reference(initial_full(kind, n), tau, t_final, [&](const diagnostics_record& r) {
        out.t.push_back(r.t);
        out.ee.push_back(r.energy_electric);
    }, stride);
    return out;
}

} // namespace

TEST_CASE("x advection is exact free streaming of a Fourier mode") {
    full_grid_state s{make_grid(64, 0.0, 4.0 * pi), make_grid(32, -6.0, 12.0, 0.5), MatrixXd(64, 32), 0.0};
    const double dt = 0.37;
    MatrixXd exact(64, 32);
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 32; ++j) {
            const double x = s.xgrid.point(i), v = s.vgrid.point(j);
            s.f(i, j) = std::cos(1.5 * x + 0.3) * std::exp(-0.5 * v * v);
            exact(i, j) = std::cos(1.5 * (x - v * dt) + 0.3) * std::exp(-0.5 * v * v);
        }
    MatrixXd f = s.f;
    advect_x(s, f, dt);
    CHECK(max_abs(f - exact) <= 1e-12);
}

TEST_CASE("v advection is an exact shift of a resolved mode") {
    full_grid_state s{make_grid(16, 0.0, 4.0 * pi), make_grid(64, -6.0, 12.0, 0.5), MatrixXd(16, 64), 0.0};
    VectorXd E(16);
    for (int i = 0; i < 16; ++i) E[i] = 0.1 * (i - 8);
    const double dt = 0.5, kv = 2.0 * pi * 3.0 / 12.0;
    MatrixXd exact(16, 64);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 64; ++j) {
            const double v = s.vgrid.point(j);
            s.f(i, j) = std::sin(kv * v) + 2.0;
            exact(i, j) = std::sin(kv * (v + E[i] * dt)) + 2.0;
        }
    MatrixXd f = s.f;
    advect_v(s, f, E, dt);
    CHECK(max_abs(f - exact) <= 1e-12);
}

TEST_CASE("a spatially uniform state is stationary") {
    full_grid_state s = initial_full(scenario_kind::landau_rank1, 64);
    const Eigen::RowVectorXd row = s.f.row(0) / (1.0 + 1e-2);
    for (int i = 0; i < s.xgrid.n; ++i) s.f.row(i) = row;
    full_grid_state n = semi_lagrangian_step(s, 0.05);
    CHECK(max_abs(n.f - s.f) <= 1e-13);
    CHECK(max_abs(field_full(n)) <= 1e-13);
}

TEST_CASE("semi-Lagrangian steps preserve the discrete mass") {
    full_grid_state s = initial_full(scenario_kind::landau_perturbed, 128);
    const double M0 = mass(s);
    for (int it = 0; it < 20; ++it) {
        const double before = mass(s);
        s = semi_lagrangian_step(s, 0.05);
        CHECK(std::abs(mass(s) - before) <= 1e-12 * M0);
    }
    full_grid_state t = initial_full(scenario_kind::two_stream, 128);
    const double T0 = mass(t);
    CHECK(std::abs(mass(semi_lagrangian_step(t, 0.05)) - T0) <= 1e-12 * T0);
}

TEST_CASE("stepping forward and back restores f") {
    full_grid_state s = initial_full(scenario_kind::landau_perturbed, 128);
    for (int it = 0; it < 5; ++it) s = semi_lagrangian_step(s, 0.1);
    full_grid_state back = semi_lagrangian_step(semi_lagrangian_step(s, 0.1), -0.1);
    CHECK(max_abs(back.f - s.f) <= 1e-11);
}

TEST_CASE("run_reference with zero final time") {
    full_grid_state s = initial_full(scenario_kind::landau_rank1, 64);
    int count = 0;
    full_grid_state out = run_reference(s, 1e-2, 0.0, [&](const diagnostics_record& r) {
        ++count;
        CHECK(r.t == 0.0);
    });
    CHECK(count == 1);
    CHECK(max_abs(out.f - s.f) == 0.0);
    CHECK_THROWS(run_reference(s, 0.0, 1.0, nullptr));
}

TEST_CASE("reference Landau damping rate matches the dispersion root") {
    series s = reference_series(scenario_kind::landau_rank1, 256, 1e-2, 10.0);
    const double oracle = landau_dispersion_rate(0.5).imag();
    const rate_fit f = fit_rate_maxima(s.t, s.ee, 0.0, 10.0);
    CHECK(std::abs(f.rate / oracle - 1.0) <= 0.02);
}

TEST_CASE("reference grid refinement changes the electric energy by at most 1e-6") {
    series a = reference_series(scenario_kind::landau_rank1, 256, 1e-2, 5.0, 500);
    series b = reference_series(scenario_kind::landau_rank1, 512, 1e-2, 5.0, 500);
    REQUIRE(a.ee.size() == b.ee.size());
    CHECK(std::abs(a.ee.back() - b.ee.back()) <= 1e-6);
}

TEST_CASE("reference and low-rank electric energies agree at matched resolution") {
    series ref = reference_series(scenario_kind::landau_perturbed, 128, 1e-3, 5.0, 100);
    run_config c;
    c.scenario = scenario_kind::landau_perturbed;
    c.r = 6;
    c.m = 3;
    c.nx = c.nv = 128;
    std::vector<double> lr;
    run_simulation(build_initial(c), 1e-4, 5.0, stepper_kind::conservative_euler,
                   [&](const diagnostics_record& r) { lr.push_back(r.energy_electric); }, 1000);
    REQUIRE(lr.size() == ref.ee.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < lr.size(); ++i) worst = std::max(worst, std::abs(lr[i] - ref.ee[i]));
    CHECK(worst <= 1e-4);
}

TEST_CASE("two-stream reference grows and then saturates") {
    series s = reference_series(scenario_kind::two_stream, 256, 1e-2, 40.0, 100);
    const double gamma = two_stream_dispersion_rate(0.2, 2.4).imag();
    const rate_fit growth = fit_rate(s.t, s.ee, 15.0, 25.0);
    CHECK(std::abs(growth.rate / gamma - 1.0) <= 0.05);
    const double peak = *std::max_element(s.ee.begin(), s.ee.end());
    CHECK(peak >= 1e3 * s.ee[10]);
    // the field amplitude no longer grows at the linear rate late in the run
    const rate_fit late = fit_rate(s.t, s.ee, 31.0, 40.0);
    CHECK(late.rate < 0.3 * gamma);
    CHECK(s.ee.back() <= peak);
}
