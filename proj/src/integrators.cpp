#include <vpdlr/integrators.hpp>
#include <vpdlr/errors.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vpdlr {

namespace {

void check_tau(double tau, bool allow_zero) {
    if (!std::isfinite(tau) || tau < 0.0 || (!allow_zero && tau == 0.0))
        throw error(error_kind::invalid_input, "integrators", "time step must be positive and finite");
}

VectorXd field_of(const lowrank_state& s, const moment_set& mo) { return solve_poisson(s.disc->xgrid, mo.rho).E; }

void finish_report(step_report& rep, const moment_set& before, const VectorXd& E_before, double tau) {
    const moment_set after = moments(rep.state_new);
    rep.E_new = solve_poisson(rep.state_new.disc->xgrid, after.rho).E;
    if (tau > 0.0) {
        continuity_residual res = continuity_residuals(rep.state_new.disc->xgrid, before, after, E_before, tau);
        rep.continuity_residual_mass = res.mass;
        rep.continuity_residual_momentum = res.momentum;
    }
}

} // namespace

step_report conservative_euler_step(const lowrank_state& s, double tau, double t) {
    validate(s);
    check_tau(tau, false);
    const discretization& d = *s.disc;
    const int r = s.r(), m = s.m(), p = r - m;

    const double cond = condition_number(s.S);
    if (!(cond <= max_condition)) {
        std::ostringstream msg;
        msg << "S has condition number " << cond << " (limit " << max_condition
            << "); use the unconventional integrator";
        throw error(error_kind::ill_conditioned, "integrators", msg.str());
    }

    const moment_set mo = moments(s);
    const VectorXd E = field_of(s, mo);
    const coefficient_set c = compute_coefficients(s, E);
    const MatrixXd Kd = rhs_K(s, c, E);
    const MatrixXd Sd = rhs_S(s, c);
    const MatrixXd Ld = rhs_L(s, c, Sd);

    MatrixXd Sn = s.S + tau * Sd;
    const MatrixXd Kn = s.K() + tau * Kd;
    const double cond_new = condition_number(Sn);
    if (!(cond_new <= max_condition))
        throw error(error_kind::ill_conditioned, "integrators", "updated S is numerically singular");
    MatrixXd Xn = Sn.transpose().fullPivLu().solve(Kn.transpose()).transpose();

    MatrixXd Vn(d.vgrid.n, r);
    if (m > 0) Vn.leftCols(m) = d.fixed.U;
    if (p > 0) {
        const MatrixXd Sf = s.S.rightCols(p);
        const MatrixXd T = Sf.transpose() * Sf;
        const MatrixXd Wn = s.V.rightCols(p) + tau * T.ldlt().solve(Ld.transpose()).transpose();
        Vn.rightCols(p) = Wn;
    }

    step_report rep;
    lowrank_state raw{s.disc, Xn, Sn, Vn};
    rep.ortho_defect_before_fix = ortho_defect(raw);

    if (p > 0) {
        // W = U A + Q R; keep f unchanged under V -> [U, Q].
        orthonormal_result q = weighted_orthonormalize(Vn.rightCols(p), d.weight.w, d.fixed.U);
        if (m > 0) Sn.leftCols(m) += Sn.rightCols(p) * q.A.transpose();
        Sn.rightCols(p) = Sn.rightCols(p) * q.R.transpose();
        Vn.rightCols(p) = q.Q;
    }
    orthonormal_result qx = orthonormalize_x(Xn, d.xgrid);
    Sn = qx.R * Sn;

    rep.state_new = lowrank_state{s.disc, qx.Q, Sn, Vn};
    rep.t_new = t + tau;
    finish_report(rep, mo, E, tau);
    return rep;
}

step_report unconventional_step(const lowrank_state& s, double tau, double t) {
    validate(s);
    check_tau(tau, true);
    const discretization& d = *s.disc;
    const int r = s.r(), m = s.m(), p = r - m;

    const moment_set mo = moments(s);
    const VectorXd E = field_of(s, mo);
    const coefficient_set c = compute_coefficients(s, E);
    const MatrixXd Kd = rhs_K(s, c, E);
    const MatrixXd Sd = rhs_S(s, c);
    const MatrixXd Ld = rhs_L(s, c, Sd);

    const MatrixXd K1 = s.K() + tau * Kd;
    const MatrixXd Xn = orthonormal_completion(K1, d.wx, MatrixXd(d.xgrid.n, 0));

    MatrixXd Vn(d.vgrid.n, r);
    if (m > 0) Vn.leftCols(m) = d.fixed.U;
    if (p > 0) {
        const MatrixXd Sf = s.S.rightCols(p);
        const MatrixXd L1 = s.V.rightCols(p) * (Sf.transpose() * Sf) + tau * Ld;
        Vn.rightCols(p) = orthonormal_completion(L1, d.weight.w, d.fixed.U);
    }

    const MatrixXd M = gram(Xn, s.X, d.wx);
    const MatrixXd N = gram(Vn, s.V, d.weight.w);
    lowrank_state proj{s.disc, Xn, M * s.S * N.transpose(), Vn};

    const VectorXd Ep = solve_poisson(d.xgrid, moments(proj).rho).E;
    const coefficient_set cp = compute_coefficients(proj, Ep);

    step_report rep;
    rep.ortho_defect_before_fix = ortho_defect(proj);
    rep.state_new = proj;
    rep.state_new.S = proj.S + tau * rhs_S(proj, cp);
    rep.t_new = t + tau;
    finish_report(rep, mo, E, tau);
    return rep;
}

lowrank_state run_simulation(const lowrank_state& s0, double tau, double t_final, stepper_kind stepper,
                             const record_sink& sink, int stride) {
    validate(s0);
    check_tau(tau, false);
    if (!(t_final >= 0.0)) throw error(error_kind::invalid_input, "integrators", "t_final must be non-negative");
    if (stride < 1) throw error(error_kind::invalid_input, "integrators", "record stride must be at least 1");
    const long steps = std::lround(t_final / tau);

    lowrank_state s = s0;
    if (sink) {
        VectorXd E = solve_poisson(s.disc->xgrid, moments(s).rho).E;
        diagnostics_record rec = invariants_from_lowrank(s, E);
        rec.t = 0.0;
        sink(rec);
    }
    double res_mass = 0.0, res_mom = 0.0;
    for (long it = 1; it <= steps; ++it) {
        const double t = (it - 1) * tau;
        step_report rep;
        try {
            rep = stepper == stepper_kind::conservative_euler ? conservative_euler_step(s, tau, t)
                                                              : unconventional_step(s, tau, t);
        } catch (const error& e) {
            throw e.with_step(it);
        }
        s = std::move(rep.state_new);
        res_mass = std::max(res_mass, rep.continuity_residual_mass);
        res_mom = std::max(res_mom, rep.continuity_residual_momentum);
        if (sink && (it % stride == 0 || it == steps)) {
            diagnostics_record rec = invariants_from_lowrank(s, rep.E_new);
            rec.t = it * tau;
            // worst step since the previous record
            rec.continuity_residual_mass = res_mass;
            rec.continuity_residual_momentum = res_mom;
            res_mass = res_mom = 0.0;
            sink(rec);
        }
    }
    return s;
}

} // namespace vpdlr
