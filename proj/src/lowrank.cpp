#include <vpdlr/lowrank.hpp>
#include <vpdlr/errors.hpp>

#include <cmath>
#include <limits>

namespace vpdlr {

std::shared_ptr<const discretization> make_discretization(const periodic_grid& xgrid, const periodic_grid& vgrid, int m) {
    auto d = std::make_shared<discretization>();
    d->xgrid = xgrid;
    d->vgrid = vgrid;
    d->weight = make_velocity_weight(vgrid);
    auto fb = build_fixed_basis(m, d->weight);
    d->fixed = std::move(fb.basis);
    d->norms = fb.norms;
    d->v = vgrid.points();
    d->wx = VectorXd::Constant(xgrid.n, xgrid.spacing());
    return d;
}

void validate(const lowrank_state& s) {
    if (!s.disc) throw error(error_kind::invalid_input, "lowrank", "state has no discretization");
    const int r = s.r();
    if (s.S.cols() != r || s.X.cols() != r || s.V.cols() != r || s.X.rows() != s.disc->xgrid.n ||
        s.V.rows() != s.disc->vgrid.n)
        throw error(error_kind::invalid_input, "lowrank", "factor shapes are inconsistent");
    if (s.m() > r) throw error(error_kind::invalid_input, "lowrank", "m exceeds the rank");
    if (!s.X.allFinite() || !s.S.allFinite() || !s.V.allFinite())
        throw error(error_kind::invalid_input, "lowrank", "state contains non-finite values");
}

MatrixXd evaluate_full(const lowrank_state& s) {
    return s.X * s.S * s.V.transpose() * s.disc->weight.f0v.asDiagonal();
}

MatrixXd velocity_derivative(const discretization& d, const MatrixXd& G) {
    MatrixXd DG = spectral_derivative_cols(d.vgrid, G);
    if (d.m() == 0) return DG;
    const double h = d.vgrid.spacing();
    const MatrixXd& U = d.fixed.U;
    MatrixXd coef = -h * (d.fixed.dU.transpose() * G) - h * (U.transpose() * DG);
    DG += d.weight.f0v.asDiagonal() * (U * coef);
    return DG;
}

coefficient_set compute_coefficients(const lowrank_state& s, const VectorXd& E) {
    const discretization& d = *s.disc;
    const VectorXd& f0 = d.weight.f0v;
    coefficient_set c;
    c.c1 = gram(s.V, d.v.asDiagonal() * s.V, d.weight.w);
    c.c2 = d.vgrid.spacing() * (s.V.transpose() * velocity_derivative(d, f0.asDiagonal() * s.V));
    c.d1 = gram(s.X, E.asDiagonal() * s.X, d.wx);
    c.d2 = gram(s.X, spectral_derivative_cols(d.xgrid, s.X), d.wx);
    return c;
}

moment_set moments(const lowrank_state& s) {
    const discretization& d = *s.disc;
    const VectorXd& w = d.weight.w;
    const MatrixXd K = s.K();
    moment_set mo;
    mo.rho = K * (s.V.transpose() * w);
    mo.j = K * (s.V.transpose() * d.v.cwiseProduct(w));
    mo.sigma = K * (s.V.transpose() * d.v.cwiseProduct(d.v).cwiseProduct(w));
    mo.e_kin = 0.5 * mo.sigma;
    return mo;
}

MatrixXd rhs_K(const lowrank_state& s, const coefficient_set& c, const VectorXd& E) {
    const MatrixXd K = s.K();
    return -spectral_derivative_cols(s.disc->xgrid, K) * c.c1.transpose() + E.asDiagonal() * K * c.c2.transpose();
}

MatrixXd rhs_S(const lowrank_state& s, const coefficient_set& c) {
    return -c.d2 * s.S * c.c1.transpose() + c.d1 * s.S * c.c2.transpose();
}

MatrixXd rhs_L(const lowrank_state& s, const coefficient_set& c, const MatrixXd& Sdot) {
    const discretization& d = *s.disc;
    const int m = s.m(), r = s.r();
    const VectorXd& f0 = d.weight.f0v;
    const MatrixXd Y = s.V * s.S.transpose();
    // (1/f0) d/dv (f0 Y); f0 >= exp(-vmax^2/2) stays representable.
    MatrixXd DwY = f0.cwiseInverse().asDiagonal() * velocity_derivative(d, f0.asDiagonal() * Y);
    MatrixXd G = -(d.v.asDiagonal() * Y) * c.d2.transpose() + DwY * c.d1.transpose();
    MatrixXd full = G * s.S - s.V * (Sdot.transpose() * s.S);
    return full.rightCols(r - m);
}

MatrixXd rhs_L(const lowrank_state& s, const coefficient_set& c) { return rhs_L(s, c, rhs_S(s, c)); }

double condition_number(const MatrixXd& S) {
    if (S.size() == 0) return 1.0;
    Eigen::JacobiSVD<MatrixXd> svd(S);
    const VectorXd& sv = svd.singularValues();
    const double smin = sv[sv.size() - 1];
    if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
    return sv[0] / smin;
}

double ortho_defect(const lowrank_state& s) {
    const int r = s.r();
    const MatrixXd I = MatrixXd::Identity(r, r);
    double gx = (gram(s.X, s.X, s.disc->wx) - I).cwiseAbs().maxCoeff();
    double gv = (gram(s.V, s.V, s.disc->weight.w) - I).cwiseAbs().maxCoeff();
    return std::max(gx, gv);
}

double frozen_defect(const lowrank_state& s) {
    const int m = s.m(), r = s.r();
    if (m == 0 || m == r) return 0.0;
    return gram(s.V.rightCols(r - m), s.disc->fixed.U, s.disc->weight.w).cwiseAbs().maxCoeff();
}

double frozen_drift(const lowrank_state& s) {
    const int m = s.m();
    if (m == 0) return 0.0;
    return (s.V.leftCols(m) - s.disc->fixed.U).cwiseAbs().maxCoeff();
}

} // namespace vpdlr
