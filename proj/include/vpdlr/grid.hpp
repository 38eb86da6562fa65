#pragma once

#include <Eigen/Dense>

namespace vpdlr {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Uniform periodic grid. Points sit at start + (i + offset)*spacing; offset is
// 0 for node-based grids and 0.5 for cell-centred ones (used in v so that the
// grid is mirror symmetric about the origin).
struct periodic_grid {
    int n = 0;
    double start = 0.0;
    double length = 1.0;
    double offset = 0.0;

    double spacing() const { return length / n; }
    double point(int i) const { return start + (i + offset) * spacing(); }
    VectorXd points() const;
    // Angular wavenumbers in FFT order, Nyquist entry set to zero.
    VectorXd wavenumbers() const;
};

periodic_grid make_grid(int n, double start, double length, double offset = 0.0);

VectorXd spectral_derivative(const periodic_grid& g, const VectorXd& values);
// Differentiates every column of `values` (rows run along the grid).
MatrixXd spectral_derivative_cols(const periodic_grid& g, const MatrixXd& values);

double quadrature(const periodic_grid& g, const VectorXd& values);

struct poisson_solution {
    VectorXd E;
    double electric_energy = 0.0;
};

// E' = 1 - rho with zero-mean gauge.
poisson_solution solve_poisson(const periodic_grid& xg, const VectorXd& rho);

// Returns g(x - d) by a Fourier phase shift of the trigonometric interpolant.
// The Nyquist mode is shifted with cos(k d) so the result stays real.
VectorXd fourier_shift(const periodic_grid& g, const VectorXd& values, double d);

void require_finite(const VectorXd& v, const char* module, const char* what);
void require_finite(const MatrixXd& v, const char* module, const char* what);

} // namespace vpdlr
