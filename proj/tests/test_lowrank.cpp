#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "random_state.hpp"
#include "test_helpers.hpp"

#include <vpdlr/errors.hpp>
#include <vpdlr/lowrank.hpp>
#include <vpdlr/scenarios.hpp>

#include <numbers>
#include <random>

using namespace vpdlr;
using testing_util::brute_force;
using testing_util::max_abs;
using testing_util::project_full;
using testing_util::weighted_norm;
using testing_util::random_state;
using testing_util::simpson;

namespace {

const double pi = std::numbers::pi;

std::shared_ptr<const discretization> disc(int nx, int nv, int m) {
    return make_discretization(make_grid(nx, 0.0, 4.0 * pi), make_grid(nv, -6.0, 12.0, 0.5), m);
}

VectorXd field(const lowrank_state& s) { return solve_poisson(s.disc->xgrid, moments(s).rho).E; }

} // namespace

TEST_CASE("evaluate_full reproduces the rank-1 Landau initial value") {
    run_config c;
    c.scenario = scenario_kind::landau_rank1;
    c.r = 1;
    c.m = 1;
    c.nx = c.nv = 128;
    lowrank_state s = build_initial(c);
    const MatrixXd F = evaluate_full(s);
    double err = 0.0;
    for (int i = 0; i < 128; ++i)
        for (int j = 0; j < 128; ++j)
            err = std::max(err, std::abs(F(i, j) - (1.0 + 1e-2 * std::cos(0.5 * s.disc->xgrid.point(i))) *
                                                       std::exp(-0.5 * std::pow(s.disc->vgrid.point(j), 2)) /
                                                       std::sqrt(2.0 * pi)));
    CHECK(err <= 1e-12);

    lowrank_state z = s;
    z.S.setZero();
    CHECK(max_abs(evaluate_full(z)) == 0.0);
}

TEST_CASE("gauge invariance under orthogonal rotation of X") {
    std::mt19937 rng(11);
    auto d = disc(64, 64, 2);
    lowrank_state s = random_state(d, 5, rng);
    MatrixXd G(5, 5);
    std::normal_distribution<double> nd;
    for (int i = 0; i < 25; ++i) G.data()[i] = nd(rng);
    Eigen::HouseholderQR<MatrixXd> qr(G);
    MatrixXd Q = qr.householderQ();
    lowrank_state t = s;
    t.X = s.X * Q;
    t.S = Q.transpose() * s.S;
    CHECK(max_abs(evaluate_full(t) - evaluate_full(s)) <= 1e-12);
    moment_set a = moments(s), b = moments(t);
    CHECK(max_abs(a.rho - b.rho) <= 1e-12);
    CHECK(max_abs(a.j - b.j) <= 1e-12);
    CHECK(max_abs(a.e_kin - b.e_kin) <= 1e-12);
}

TEST_CASE("coefficient examples") {
    auto d = disc(128, 128, 3);
    lowrank_state s{d, MatrixXd::Zero(128, 3), MatrixXd::Identity(3, 3), d->fixed.U};
    s.X = orthonormalize_x(s.X.setRandom(), d->xgrid).Q;
    coefficient_set c = compute_coefficients(s, VectorXd::Zero(128));
    // c1_12 = <U1, v U2> = <1, v^2>/(|1| |v|): direct grid sums, then the
    // continuous integrals up to the grid quadrature error
    const VectorXd v = d->v, f0 = (-0.5 * v.array().square()).exp().matrix();
    const double h = d->vgrid.spacing();
    const double s0 = h * f0.sum(), s2 = h * v.array().square().matrix().dot(f0);
    CHECK(std::abs(c.c1(0, 1) - s2 / std::sqrt(s0 * s2)) <= 1e-12);
    const double m0 = simpson([](double t) { return std::exp(-0.5 * t * t); }, -6.0, 6.0);
    const double m2 = simpson([](double t) { return t * t * std::exp(-0.5 * t * t); }, -6.0, 6.0);
    CHECK(std::abs(c.c1(0, 1) - m2 / std::sqrt(m0 * m2)) <= 1e-8);
    CHECK(max_abs(c.d1) == 0.0);

    lowrank_state flat = s;
    flat.X = MatrixXd::Constant(128, 3, 0.3);
    CHECK(max_abs(compute_coefficients(flat, VectorXd::Zero(128)).d2) <= 1e-13);
}

TEST_CASE("coefficient symmetries and the zero row for U1") {
    std::mt19937 rng(5);
    for (int m = 0; m <= 3; ++m) {
        auto d = disc(64, 64, m);
        for (int trial = 0; trial < 5; ++trial) {
            lowrank_state s = random_state(d, 6, rng);
            coefficient_set c = compute_coefficients(s, field(s));
            CHECK(max_abs(c.c1 - c.c1.transpose()) <= 1e-12);
            CHECK(max_abs(c.d1 - c.d1.transpose()) <= 1e-12);
            CHECK(max_abs(c.d2 + c.d2.transpose()) <= 1e-12);
            if (m >= 1) CHECK(max_abs(c.c2.row(0)) <= 1e-13);
        }
    }
}

TEST_CASE("corrected velocity derivative integrates by parts exactly against the frozen basis") {
    auto d = disc(64, 128, 3);
    const VectorXd v = d->v;
    MatrixXd G(128, 3);
    for (int c = 0; c < 3; ++c) G.col(c) = (v.array().pow(c + 2) * d->weight.f0v.array()).matrix();
    MatrixXd DG = velocity_derivative(*d, G);
    const double h = d->vgrid.spacing();
    // int v (d/dv g) dv = -int g dv and int (v^2-1) dg = -int 2 v g
    for (int c = 0; c < 3; ++c) {
        CHECK(std::abs(h * v.dot(DG.col(c)) + h * G.col(c).sum()) <= 1e-12);
        CHECK(std::abs(h * (v.array().square() - 1.0).matrix().dot(DG.col(c)) + 2.0 * h * v.dot(G.col(c))) <= 1e-12);
        CHECK(std::abs(h * DG.col(c).sum()) <= 1e-13);
    }
    // otherwise the ordinary derivative, up to the kink of g at the periodic
    // boundary (g' ~ 3e-6 there)
    VectorXd exact = ((2.0 * v.array() - v.array().cube()) * d->weight.f0v.array()).matrix();
    CHECK(max_abs(DG.col(0) - exact) <= 1e-5);
}

TEST_CASE("moments of the initial values") {
    const double mtr = simpson([](double v) { return std::exp(-0.5 * v * v); }, -6.0, 6.0) / std::sqrt(2.0 * pi);
    run_config c;
    c.scenario = scenario_kind::landau_rank1;
    c.r = 10;
    c.m = 3;
    c.nx = c.nv = 128;
    lowrank_state s = build_initial(c);
    moment_set mo = moments(s);
    // 4 pi times the grid sum of the truncated Maxwellian; the continuous
    // truncated integral differs from it by the v quadrature error
    const VectorXd vg = s.disc->v;
    const double msum = s.disc->vgrid.spacing() * (-0.5 * vg.array().square()).exp().sum() / std::sqrt(2.0 * pi);
    CHECK(std::abs(quadrature(s.disc->xgrid, mo.rho) - 4.0 * pi * msum) <= 1e-10);
    CHECK(std::abs(quadrature(s.disc->xgrid, mo.rho) - 4.0 * pi * mtr) <= 1e-8);
    CHECK(std::abs(quadrature(s.disc->xgrid, mo.rho) - 4.0 * pi) <= 1e-7);
    CHECK(std::abs(quadrature(s.disc->xgrid, mo.j)) <= 1e-12);

    c.scenario = scenario_kind::two_stream;
    lowrank_state t = build_initial(c);
    CHECK(std::abs(quadrature(t.disc->xgrid, moments(t).j)) <= 1e-11);
}

TEST_CASE("closed-form moments through K for frozen basis states") {
    std::mt19937 rng(17);
    auto d = disc(64, 128, 3);
    lowrank_state s = random_state(d, 6, rng);
    moment_set mo = moments(s);
    const MatrixXd K = s.K();
    const MatrixXd& R = d->fixed.R;
    CHECK(max_abs(mo.rho - d->norms.norm_one * K.col(0)) <= 1e-12);
    CHECK(std::abs(R(0, 0) - d->norms.norm_one) <= 1e-15);
    CHECK(max_abs(mo.j - (R(0, 1) * K.col(0) + R(1, 1) * K.col(1))) <= 1e-12);
    CHECK(std::abs(R(1, 1) - d->norms.norm_v) <= 1e-12);
    CHECK(max_abs(mo.e_kin - 0.5 * K.leftCols(3) * (R.col(0) + R.col(2))) <= 1e-12);
}

TEST_CASE("rhs trivial cases") {
    auto d = disc(64, 64, 2);
    lowrank_state s{d, MatrixXd::Constant(64, 4, 0.0), MatrixXd::Identity(4, 4), MatrixXd()};
    std::mt19937 rng(2);
    lowrank_state base = random_state(d, 4, rng);
    s.V = base.V;
    s.X.setConstant(1.0 / std::sqrt(4.0 * pi));
    s.S = base.S;
    const VectorXd E0 = VectorXd::Zero(64);
    coefficient_set c = compute_coefficients(s, E0);
    CHECK(max_abs(rhs_K(s, c, E0)) <= 1e-13);
    CHECK(max_abs(rhs_S(s, c)) <= 1e-13);

    // free streaming: total mass flux vanishes
    lowrank_state r = random_state(d, 4, rng);
    coefficient_set cr = compute_coefficients(r, E0);
    MatrixXd Kd = rhs_K(r, cr, E0);
    CHECK(std::abs(quadrature(d->xgrid, Kd.col(0)) * d->norms.norm_one) <= 1e-13);

    auto full = disc(64, 64, 3);
    lowrank_state q = random_state(full, 3, rng);
    CHECK(rhs_L(q, compute_coefficients(q, field(q))).cols() == 0);
}

TEST_CASE("rhs of the Landau state matches the tensor-grid projection") {
    run_config c;
    c.scenario = scenario_kind::landau_perturbed;
    c.r = 6;
    c.m = 3;
    c.nx = c.nv = 128;
    lowrank_state s = build_initial(c);
    const VectorXd E = field(s);
    coefficient_set co = compute_coefficients(s, E);
    brute_force b = project_full(s, E);
    CHECK(max_abs(rhs_K(s, co, E) - b.Kdot) <= 1e-11);
    CHECK(max_abs(rhs_S(s, co) - b.Sdot) <= 1e-11);
    CHECK(weighted_norm(rhs_L(s, co) - b.Ldot, s.disc->weight.w) <= 1e-10);
}

TEST_CASE("rhs oracle equivalence on random orthonormal states") {
    std::mt19937 rng(2024);
    int count = 0;
    for (int m = 0; m <= 3; ++m) {
        auto d = disc(64, 64, m);
        for (int trial = 0; trial < 5; ++trial, ++count) {
            const int r = std::max(m, 1) + trial % (7 - std::max(m, 1));
            lowrank_state s = random_state(d, r, rng);
            const VectorXd E = field(s);
            coefficient_set co = compute_coefficients(s, E);
            brute_force b = project_full(s, E);
            const MatrixXd Sd = rhs_S(s, co);
            const MatrixXd Ld = rhs_L(s, co, Sd);
            CHECK(max_abs(rhs_K(s, co, E) - b.Kdot) <= 1e-10);
            CHECK(max_abs(Sd - b.Sdot) <= 1e-10);
            CHECK(weighted_norm(Ld - b.Ldot, d->weight.w) <= 1e-10);
            // tangent-space orthogonality
            if (m > 0 && r > m) CHECK(max_abs(gram(Ld, d->fixed.U, d->weight.w)) <= 1e-12);
        }
    }
    CHECK(count == 20);
}

TEST_CASE("condition number and validation") {
    MatrixXd S = MatrixXd::Identity(2, 2);
    S(1, 1) = 1e-13;
    CHECK(condition_number(S) == Catch::Approx(1e13));
    CHECK(std::isinf(condition_number(MatrixXd::Zero(3, 3))));

    auto d = disc(32, 32, 3);
    lowrank_state s{d, MatrixXd::Zero(32, 2), MatrixXd::Identity(2, 2), MatrixXd::Zero(32, 2)};
    CHECK_THROWS_AS(validate(s), error);
    s = lowrank_state{d, MatrixXd::Zero(32, 4), MatrixXd::Identity(3, 3), MatrixXd::Zero(32, 3)};
    CHECK_THROWS_AS(validate(s), error);
}
