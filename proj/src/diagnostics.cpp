#include <vpdlr/diagnostics.hpp>
#include <vpdlr/errors.hpp>

#include <cmath>

namespace vpdlr {

diagnostics_record invariants_from_lowrank(const lowrank_state& s, const VectorXd& E) {
    const discretization& d = *s.disc;
    const moment_set mo = moments(s);
    diagnostics_record rec;
    rec.mass = quadrature(d.xgrid, mo.rho);
    rec.momentum = quadrature(d.xgrid, mo.j);
    rec.energy_kinetic = quadrature(d.xgrid, mo.e_kin);
    rec.energy_electric = 0.5 * quadrature(d.xgrid, E.cwiseProduct(E));
    rec.energy_total = rec.energy_kinetic + rec.energy_electric;
    // int int f^2 dx dv = tr(Gx S Gv S^T)
    const MatrixXd Gx = gram(s.X, s.X, d.wx);
    const VectorXd f0sq = d.vgrid.spacing() * d.weight.f0v.cwiseProduct(d.weight.f0v);
    const MatrixXd Gv = gram(s.V, s.V, f0sq);
    rec.l2_norm_f = std::sqrt(std::max(0.0, (Gx * s.S * Gv * s.S.transpose()).trace()));
    rec.ortho_defect = ortho_defect(s);
    return rec;
}

diagnostics_record invariants_from_full(const periodic_grid& xgrid, const periodic_grid& vgrid, const MatrixXd& f,
                                        const VectorXd& E) {
    const VectorXd v = vgrid.points();
    const double hv = vgrid.spacing();
    const VectorXd rho = hv * f.rowwise().sum();
    const VectorXd j = hv * (f * v);
    const VectorXd ek = 0.5 * hv * (f * v.cwiseProduct(v));
    diagnostics_record rec;
    rec.mass = quadrature(xgrid, rho);
    rec.momentum = quadrature(xgrid, j);
    rec.energy_kinetic = quadrature(xgrid, ek);
    rec.energy_electric = 0.5 * quadrature(xgrid, E.cwiseProduct(E));
    rec.energy_total = rec.energy_kinetic + rec.energy_electric;
    rec.l2_norm_f = std::sqrt(xgrid.spacing() * hv * f.squaredNorm());
    return rec;
}

VectorXd energy_density_closed_form(const lowrank_state& s, const VectorXd& E) {
    if (s.m() < 3) throw error(error_kind::invalid_input, "diagnostics", "closed-form energy density needs m = 3");
    // v^2 = 1 + (v^2-1) = U (R e_1 + R e_3) in terms of the frozen columns.
    const MatrixXd& R = s.disc->fixed.R;
    const VectorXd coef = R.col(0) + R.col(2);
    const MatrixXd K = s.K();
    return 0.5 * (K.leftCols(3) * coef) + 0.5 * E.cwiseProduct(E);
}

VectorXd energy_density_quadrature(const lowrank_state& s, const VectorXd& E) {
    return moments(s).e_kin + 0.5 * E.cwiseProduct(E);
}

continuity_residual continuity_residuals(const periodic_grid& xgrid, const moment_set& prev, const moment_set& next,
                                         const VectorXd& E_prev, double tau) {
    continuity_residual r;
    const VectorXd dj = spectral_derivative(xgrid, prev.j);
    const VectorXd ds = spectral_derivative(xgrid, prev.sigma);
    r.mass = ((next.rho - prev.rho) / tau + dj).cwiseAbs().maxCoeff();
    r.momentum = ((next.j - prev.j) / tau + ds + E_prev.cwiseProduct(prev.rho)).cwiseAbs().maxCoeff();
    return r;
}

namespace {

rate_fit line_fit(const std::vector<double>& t, const std::vector<double>& y, double t_lo, double t_hi) {
    const int n = static_cast<int>(t.size());
    double mt = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
        mt += t[i];
        my += y[i];
    }
    mt /= n;
    my /= n;
    double stt = 0.0, sty = 0.0;
    for (int i = 0; i < n; ++i) {
        stt += (t[i] - mt) * (t[i] - mt);
        sty += (t[i] - mt) * (y[i] - my);
    }
    rate_fit f;
    f.rate = sty / stt;
    f.t_lo = t_lo;
    f.t_hi = t_hi;
    f.samples = n;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double e = y[i] - (my + f.rate * (t[i] - mt));
        ss += e * e;
    }
    f.residual = std::sqrt(ss / n);
    return f;
}

void check_window(const std::vector<double>& t, const std::vector<double>& value, double t_lo, double t_hi) {
    if (t.size() != value.size()) throw error(error_kind::invalid_window, "diagnostics", "series length mismatch");
    if (!(t_lo < t_hi)) throw error(error_kind::invalid_window, "diagnostics", "window must satisfy t_lo < t_hi");
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i] >= t_lo && t[i] <= t_hi && !(value[i] > 0.0))
            throw error(error_kind::invalid_window, "diagnostics", "non-positive value inside the fit window");
}

} // namespace

rate_fit fit_rate(const std::vector<double>& t, const std::vector<double>& value, double t_lo, double t_hi) {
    check_window(t, value, t_lo, t_hi);
    std::vector<double> ts, ys;
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i] >= t_lo && t[i] <= t_hi) {
            ts.push_back(t[i]);
            ys.push_back(0.5 * std::log(value[i]));
        }
    if (ts.size() < 10) throw error(error_kind::invalid_window, "diagnostics", "fewer than 10 samples in the fit window");
    return line_fit(ts, ys, t_lo, t_hi);
}

rate_fit fit_rate_maxima(const std::vector<double>& t, const std::vector<double>& value, double t_lo, double t_hi) {
    check_window(t, value, t_lo, t_hi);
    std::vector<double> ts, ys;
    bool seen_min = false;
    for (size_t i = 1; i + 1 < t.size(); ++i) {
        if (t[i] < t_lo || t[i] > t_hi) continue;
        if (value[i] < value[i - 1] && value[i] <= value[i + 1]) seen_min = true;
        if (seen_min && value[i] > value[i - 1] && value[i] >= value[i + 1]) {
            ts.push_back(t[i]);
            ys.push_back(0.5 * std::log(value[i]));
        }
    }
    if (ts.size() < 3) throw error(error_kind::invalid_window, "diagnostics", "fewer than 3 maxima in the fit window");
    return line_fit(ts, ys, t_lo, t_hi);
}

} // namespace vpdlr
