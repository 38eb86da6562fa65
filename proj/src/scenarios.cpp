#include <vpdlr/scenarios.hpp>
#include <vpdlr/errors.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace vpdlr {

namespace {

const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// Probabilists' Hermite polynomial He_n(v).
double hermite(int n, double v) {
    double a = 1.0, b = v;
    if (n == 0) return a;
    for (int i = 1; i < n; ++i) {
        const double c = v * b - i * a;
        a = b;
        b = c;
    }
    return b;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

scenario_spec default_spec(scenario_kind kind) {
    scenario_spec sp;
    sp.kind = kind;
    switch (kind) {
    case scenario_kind::landau_perturbed:
        sp.x_length = 4.0 * std::numbers::pi;
        sp.v_max = 6.0;
        sp.alpha = 1e-2;
        sp.k = 0.5;
        sp.eps = {1e-4, 1e-4, 1e-4, 1e-5, 1e-5};
        break;
    case scenario_kind::maxwellian_shear:
        sp.x_length = 4.0 * std::numbers::pi;
        sp.v_max = 6.0;
        sp.alpha = 1e-2;
        sp.k = 0.5;
        sp.u_amp = 0.2;
        sp.terms = 6;
        break;
    case scenario_kind::landau_rank1:
        sp.x_length = 4.0 * std::numbers::pi;
        sp.v_max = 6.0;
        sp.alpha = 1e-2;
        sp.k = 0.5;
        break;
    case scenario_kind::two_stream:
        sp.x_length = 10.0 * std::numbers::pi;
        sp.v_max = 7.0;
        sp.alpha = 1e-3;
        sp.k = 0.2;
        sp.vbar = 2.4;
        break;
    }
    return sp;
}

periodic_grid scenario_xgrid(const scenario_spec& sp, int nx) { return make_grid(nx, 0.0, sp.x_length); }

periodic_grid scenario_vgrid(const scenario_spec& sp, int nv) {
    return make_grid(nv, -sp.v_max, 2.0 * sp.v_max, 0.5);
}

factored_ic scenario_factors(const scenario_spec& sp, const periodic_grid& xgrid, const periodic_grid& vgrid) {
    const VectorXd x = xgrid.points(), v = vgrid.points();
    const int nx = xgrid.n, nv = vgrid.n;
    factored_ic ic;
    const VectorXd rho = (1.0 + sp.alpha * (sp.k * x.array()).cos()).matrix();
    switch (sp.kind) {
    case scenario_kind::landau_perturbed: {
        const int p = 1 + static_cast<int>(sp.eps.size());
        ic.xf.resize(nx, p);
        ic.vf.resize(nv, p);
        ic.xf.col(0) = rho;
        ic.vf.col(0).setConstant(inv_sqrt_2pi);
        for (int q = 1; q < p; ++q) {
            ic.xf.col(q) = (0.5 * (q + 1) * x.array()).cos().matrix();
            ic.vf.col(q) = sp.eps[q - 1] * v.array().pow(q).matrix();
        }
        break;
    }
    case scenario_kind::maxwellian_shear: {
        // rho/sqrt(2pi) exp(-(v-u)^2/2) = f0v rho/sqrt(2pi) sum_n u^n He_n(v)/n!
        const VectorXd u = (sp.u_amp * x.array().cos()).matrix();
        ic.xf.resize(nx, sp.terms);
        ic.vf.resize(nv, sp.terms);
        for (int n = 0; n < sp.terms; ++n) {
            ic.xf.col(n) = (rho.array() * u.array().pow(n) * (inv_sqrt_2pi / factorial(n))).matrix();
            for (int j = 0; j < nv; ++j) ic.vf(j, n) = hermite(n, v[j]);
        }
        break;
    }
    case scenario_kind::landau_rank1:
        ic.xf = rho;
        ic.vf = VectorXd::Constant(nv, inv_sqrt_2pi);
        break;
    case scenario_kind::two_stream:
        // Two unit Maxwellians at +-vbar divided by f0v.
        ic.xf = rho;
        ic.vf = ((v.array() * sp.vbar).cosh() * (std::exp(-0.5 * sp.vbar * sp.vbar) * inv_sqrt_2pi)).matrix();
        break;
    }
    return ic;
}

double scenario_value(const scenario_spec& sp, double x, double v) {
    const double rho = 1.0 + sp.alpha * std::cos(sp.k * x);
    const double g = std::exp(-0.5 * v * v);
    switch (sp.kind) {
    case scenario_kind::landau_perturbed: {
        double f = rho * g * inv_sqrt_2pi;
        for (size_t q = 0; q < sp.eps.size(); ++q)
            f += sp.eps[q] * std::cos(0.5 * (q + 2) * x) * std::pow(v, static_cast<int>(q + 1)) * g;
        return f;
    }
    case scenario_kind::maxwellian_shear: {
        const double u = sp.u_amp * std::cos(x);
        double series = 0.0;
        for (int n = 0; n < sp.terms; ++n) series += std::pow(u, n) * hermite(n, v) / factorial(n);
        return rho * inv_sqrt_2pi * g * series;
    }
    case scenario_kind::landau_rank1: return rho * g * inv_sqrt_2pi;
    case scenario_kind::two_stream:
        return rho * 0.5 * inv_sqrt_2pi *
               (std::exp(-0.5 * (v - sp.vbar) * (v - sp.vbar)) + std::exp(-0.5 * (v + sp.vbar) * (v + sp.vbar)));
    }
    return 0.0;
}

lowrank_state build_from_factors(std::shared_ptr<const discretization> disc, int r, const MatrixXd& xf,
                                 const MatrixXd& vf) {
    const discretization& d = *disc;
    const int nx = d.xgrid.n, nv = d.vgrid.n, m = d.m();
    const VectorXd x = d.xgrid.points();
    auto too_small = [&](const std::string& what) {
        throw error(error_kind::invalid_config, "cli",
                    "rank " + std::to_string(r) + " is below the intrinsic rank of the initial value (" + what + ")");
    };

    MatrixXd Xa = greedy_extend(MatrixXd(nx, 0), xf, d.wx, static_cast<int>(xf.cols()), 1e-10);
    if (Xa.cols() > r) too_small("x factors");
    MatrixXd Wa = greedy_extend(d.fixed.U, vf, d.weight.w, static_cast<int>(vf.cols()), 1e-10);
    if (m + Wa.cols() > r) too_small("v factors");

    MatrixXd fourier(nx, nx - 1);
    fourier.col(0).setOnes();
    for (int j = 1; j < nx / 2; ++j) {
        const double kk = 2.0 * std::numbers::pi * j / d.xgrid.length;
        fourier.col(2 * j - 1) = (kk * x.array()).cos().matrix();
        fourier.col(2 * j) = (kk * x.array()).sin().matrix();
    }
    MatrixXd X(nx, r);
    X.leftCols(Xa.cols()) = Xa;
    if (Xa.cols() < r) X.rightCols(r - Xa.cols()) = extend_basis(Xa, fourier, d.wx, r - static_cast<int>(Xa.cols()));

    MatrixXd V(nv, r);
    if (m > 0) V.leftCols(m) = d.fixed.U;
    V.middleCols(m, Wa.cols()) = Wa;
    const int have = m + static_cast<int>(Wa.cols());
    if (have < r) {
        const int deg = r + 4;
        MatrixXd mono(nv, deg);
        for (int k = 0; k < deg; ++k) mono.col(k) = d.v.array().pow(k).matrix();
        V.rightCols(r - have) = extend_basis(V.leftCols(have), mono, d.weight.w, r - have);
    }

    lowrank_state s{disc, X, gram(X, xf, d.wx) * gram(V, vf, d.weight.w).transpose(), V};
    // Exact zeros in directions the data does not reach.
    for (int i = static_cast<int>(Xa.cols()); i < r; ++i) s.S.row(i).setZero();
    for (int j = have; j < r; ++j) s.S.col(j).setZero();
    return s;
}

lowrank_state build_initial(const run_config& c) {
    const scenario_spec sp = default_spec(c.scenario);
    auto disc = make_discretization(scenario_xgrid(sp, c.nx), scenario_vgrid(sp, c.nv), c.m);
    const factored_ic ic = scenario_factors(sp, disc->xgrid, disc->vgrid);
    return build_from_factors(disc, c.r, ic.xf, ic.vf);
}

full_grid_state build_initial_full(const run_config& c) {
    const scenario_spec sp = default_spec(c.scenario);
    full_grid_state s;
    s.xgrid = scenario_xgrid(sp, c.nx);
    s.vgrid = scenario_vgrid(sp, c.nv);
    s.f.resize(c.nx, c.nv);
    for (int i = 0; i < c.nx; ++i)
        for (int j = 0; j < c.nv; ++j) s.f(i, j) = scenario_value(sp, s.xgrid.point(i), s.vgrid.point(j));
    return s;
}

} // namespace vpdlr
