#include <vpdlr/grid.hpp>
#include <vpdlr/errors.hpp>
#include <vpdlr/fft.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace vpdlr {

VectorXd periodic_grid::points() const {
    VectorXd p(n);
    for (int i = 0; i < n; ++i) p[i] = point(i);
    return p;
}

VectorXd periodic_grid::wavenumbers() const {
    VectorXd k(n);
    const double base = 2.0 * std::numbers::pi / length;
    for (int i = 0; i < n; ++i) k[i] = base * (i < n / 2 ? i : i - n);
    if (n > 1) k[n / 2] = 0.0;
    return k;
}

periodic_grid make_grid(int n, double start, double length, double offset) {
    if (!is_power_of_two(n))
        throw error(error_kind::invalid_input, "grid", "grid size must be a power of two, got " + std::to_string(n));
    if (!(length > 0.0) || !std::isfinite(length) || !std::isfinite(start))
        throw error(error_kind::invalid_input, "grid", "grid length must be positive and finite");
    if (offset < 0.0 || offset >= 1.0)
        throw error(error_kind::invalid_input, "grid", "grid offset must lie in [0,1)");
    return periodic_grid{n, start, length, offset};
}

void require_finite(const VectorXd& v, const char* module, const char* what) {
    if (!v.allFinite()) throw error(error_kind::invalid_input, module, std::string(what) + ": non-finite values");
}

void require_finite(const MatrixXd& v, const char* module, const char* what) {
    if (!v.allFinite()) throw error(error_kind::invalid_input, module, std::string(what) + ": non-finite values");
}

namespace {

void check_size(const periodic_grid& g, Eigen::Index rows) {
    if (rows != g.n) throw error(error_kind::invalid_input, "grid", "values do not match grid size");
}

} // namespace

MatrixXd spectral_derivative_cols(const periodic_grid& g, const MatrixXd& values) {
    check_size(g, values.rows());
    require_finite(values, "grid", "spectral_derivative");
    const int n = g.n;
    const VectorXd k = g.wavenumbers();
    MatrixXd out(n, values.cols());
    cvec buf(n);
    // Two real columns share one complex transform.
    for (Eigen::Index c = 0; c < values.cols(); c += 2) {
        const bool pair = c + 1 < values.cols();
        for (int i = 0; i < n; ++i) buf[i] = {values(i, c), pair ? values(i, c + 1) : 0.0};
        fft(buf);
        for (int i = 0; i < n; ++i) buf[i] *= std::complex<double>(0.0, k[i]);
        fft(buf, true);
        // i*k*F(a) + i*(i*k*F(b)) splits because each derivative is real.
        for (int i = 0; i < n; ++i) {
            out(i, c) = buf[i].real();
            if (pair) out(i, c + 1) = buf[i].imag();
        }
    }
    return out;
}

VectorXd spectral_derivative(const periodic_grid& g, const VectorXd& values) {
    return spectral_derivative_cols(g, values);
}

double quadrature(const periodic_grid& g, const VectorXd& values) {
    check_size(g, values.size());
    require_finite(values, "grid", "quadrature");
    return g.spacing() * values.sum();
}

poisson_solution solve_poisson(const periodic_grid& xg, const VectorXd& rho) {
    check_size(xg, rho.size());
    require_finite(rho, "grid", "solve_poisson");
    const int n = xg.n;
    const VectorXd k = xg.wavenumbers();
    cvec buf(n);
    for (int i = 0; i < n; ++i) buf[i] = 1.0 - rho[i];
    fft(buf);
    buf[0] = 0.0;
    for (int i = 1; i < n; ++i) buf[i] = k[i] != 0.0 ? buf[i] / std::complex<double>(0.0, k[i]) : 0.0;
    fft(buf, true);
    poisson_solution s;
    s.E.resize(n);
    for (int i = 0; i < n; ++i) s.E[i] = buf[i].real();
    s.electric_energy = 0.5 * xg.spacing() * s.E.squaredNorm();
    return s;
}

VectorXd fourier_shift(const periodic_grid& g, const VectorXd& values, double d) {
    check_size(g, values.size());
    const int n = g.n;
    const double base = 2.0 * std::numbers::pi / g.length;
    cvec buf(n);
    for (int i = 0; i < n; ++i) buf[i] = values[i];
    fft(buf);
    for (int i = 0; i < n; ++i) {
        if (n > 1 && i == n / 2) {
            buf[i] *= std::cos(base * (n / 2) * d);
            continue;
        }
        const double kk = base * (i < n / 2 ? i : i - n);
        buf[i] *= std::polar(1.0, -kk * d);
    }
    fft(buf, true);
    VectorXd out(n);
    for (int i = 0; i < n; ++i) out[i] = buf[i].real();
    return out;
}

} // namespace vpdlr
