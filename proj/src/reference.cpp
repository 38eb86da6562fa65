#include <vpdlr/reference.hpp>
#include <vpdlr/errors.hpp>
#include <vpdlr/fft.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vpdlr {

namespace {

// Shifts lines a and b (same grid) by da and db at once: the shift is real
// linear, so one complex transform carries both.
void shift_pair(const periodic_grid& g, cvec& buf, const double* a, const double* b, long sa, long sb, double da,
                double db, double* oa, double* ob) {
    const int n = g.n;
    const double base = 2.0 * std::numbers::pi / g.length;
    for (int i = 0; i < n; ++i) buf[i] = {a[i * sa], b ? b[i * sb] : 0.0};
    fft(buf);
    if (b == nullptr || da == db) {
        for (int i = 0; i < n; ++i) {
            if (n > 1 && i == n / 2) {
                buf[i] *= std::cos(base * (n / 2) * da);
                continue;
            }
            const double kk = base * (i < n / 2 ? i : i - n);
            buf[i] *= std::polar(1.0, -kk * da);
        }
        fft(buf, true);
        for (int i = 0; i < n; ++i) {
            oa[i * sa] = buf[i].real();
            if (b) ob[i * sb] = buf[i].imag();
        }
        return;
    }
    // Different shifts: split the spectra of the two real lines first.
    cvec A(n), B(n);
    for (int i = 0; i < n; ++i) {
        const std::complex<double> z = buf[i], zc = std::conj(buf[(n - i) % n]);
        A[i] = 0.5 * (z + zc);
        B[i] = std::complex<double>(0.0, -0.5) * (z - zc);
    }
    for (int i = 0; i < n; ++i) {
        if (n > 1 && i == n / 2) {
            buf[i] = A[i] * std::cos(base * (n / 2) * da) +
                     std::complex<double>(0.0, 1.0) * B[i] * std::cos(base * (n / 2) * db);
            continue;
        }
        const double kk = base * (i < n / 2 ? i : i - n);
        buf[i] = A[i] * std::polar(1.0, -kk * da) + std::complex<double>(0.0, 1.0) * B[i] * std::polar(1.0, -kk * db);
    }
    fft(buf, true);
    for (int i = 0; i < n; ++i) {
        oa[i * sa] = buf[i].real();
        ob[i * sb] = buf[i].imag();
    }
}

} // namespace

// x-advection by v_j * dt for every column j.
void advect_x(const full_grid_state& s, MatrixXd& f, double dt) {
    const int nx = s.xgrid.n, nv = s.vgrid.n;
    cvec buf(nx);
    for (int j = 0; j < nv; j += 2) {
        const bool pair = j + 1 < nv;
        double* a = f.col(j).data();
        double* b = pair ? f.col(j + 1).data() : nullptr;
        shift_pair(s.xgrid, buf, a, b, 1, 1, s.vgrid.point(j) * dt, pair ? s.vgrid.point(j + 1) * dt : 0.0, a, b);
    }
}

// v-advection f(x_i, v) <- f(x_i, v + E_i dt).
void advect_v(const full_grid_state& s, MatrixXd& f, const VectorXd& E, double dt) {
    const int nx = s.xgrid.n, nv = s.vgrid.n;
    const long stride = f.outerStride();
    cvec buf(nv);
    for (int i = 0; i < nx; i += 2) {
        const bool pair = i + 1 < nx;
        double* a = f.data() + i;
        double* b = pair ? f.data() + i + 1 : nullptr;
        shift_pair(s.vgrid, buf, a, b, stride, stride, -E[i] * dt, pair ? -E[i + 1] * dt : 0.0, a, b);
    }
}

moment_set moments_full(const full_grid_state& s) {
    const VectorXd v = s.vgrid.points();
    const double hv = s.vgrid.spacing();
    moment_set mo;
    mo.rho = hv * s.f.rowwise().sum();
    mo.j = hv * (s.f * v);
    mo.sigma = hv * (s.f * v.cwiseProduct(v));
    mo.e_kin = 0.5 * mo.sigma;
    return mo;
}

VectorXd field_full(const full_grid_state& s) { return solve_poisson(s.xgrid, moments_full(s).rho).E; }

full_grid_state semi_lagrangian_step(const full_grid_state& s, double tau) {
    if (!std::isfinite(tau)) throw error(error_kind::invalid_input, "reference", "time step must be finite");
    if (s.f.rows() != s.xgrid.n || s.f.cols() != s.vgrid.n)
        throw error(error_kind::invalid_input, "reference", "distribution does not match the grids");
    full_grid_state out = s;
    advect_x(s, out.f, 0.5 * tau);
    const VectorXd E = field_full(out);
    advect_v(s, out.f, E, tau);
    advect_x(s, out.f, 0.5 * tau);
    out.t = s.t + tau;
    return out;
}

full_grid_state run_reference(const full_grid_state& s0, double tau, double t_final, const full_record_sink& sink,
                              int stride) {
    if (!(tau > 0.0)) throw error(error_kind::invalid_input, "reference", "time step must be positive");
    if (!(t_final >= 0.0)) throw error(error_kind::invalid_input, "reference", "t_final must be non-negative");
    if (stride < 1) throw error(error_kind::invalid_input, "reference", "record stride must be at least 1");
    const long steps = std::lround(t_final / tau);
    full_grid_state s = s0;
    moment_set mo = moments_full(s);
    VectorXd E = solve_poisson(s.xgrid, mo.rho).E;
    if (sink) {
        diagnostics_record rec = invariants_from_full(s.xgrid, s.vgrid, s.f, E);
        rec.t = 0.0;
        sink(rec);
    }
    double res_mass = 0.0, res_mom = 0.0;
    for (long it = 1; it <= steps; ++it) {
        s = semi_lagrangian_step(s, tau);
        s.t = it * tau;
        moment_set next = moments_full(s);
        continuity_residual cr = continuity_residuals(s.xgrid, mo, next, E, tau);
        res_mass = std::max(res_mass, cr.mass);
        res_mom = std::max(res_mom, cr.momentum);
        mo = std::move(next);
        E = solve_poisson(s.xgrid, mo.rho).E;
        if (sink && (it % stride == 0 || it == steps)) {
            diagnostics_record rec = invariants_from_full(s.xgrid, s.vgrid, s.f, E);
            rec.t = s.t;
            rec.continuity_residual_mass = res_mass;
            rec.continuity_residual_momentum = res_mom;
            res_mass = res_mom = 0.0;
            sink(rec);
        }
    }
    return s;
}

} // namespace vpdlr
