#pragma once

#include <vpdlr/lowrank.hpp>

#include <complex>
#include <vector>

namespace vpdlr {

struct diagnostics_record {
    double t = 0.0;
    double mass = 0.0;
    double momentum = 0.0;
    double energy_total = 0.0;
    double energy_electric = 0.0;
    double energy_kinetic = 0.0;
    double l2_norm_f = 0.0;
    double continuity_residual_mass = 0.0;
    double continuity_residual_momentum = 0.0;
    double ortho_defect = 0.0;
};

diagnostics_record invariants_from_lowrank(const lowrank_state& s, const VectorXd& E);
// Same quantities by direct quadrature of a full-grid f (f includes f0v).
diagnostics_record invariants_from_full(const periodic_grid& xgrid, const periodic_grid& vgrid, const MatrixXd& f,
                                        const VectorXd& E);

// Energy density from the frozen-basis closed form (needs m = 3):
// 1/2 int v^2 f dv + 1/2 E^2 written through K_1, K_2, K_3.
VectorXd energy_density_closed_form(const lowrank_state& s, const VectorXd& E);
VectorXd energy_density_quadrature(const lowrank_state& s, const VectorXd& E);

struct continuity_residual {
    double mass = 0.0;
    double momentum = 0.0;
};

continuity_residual continuity_residuals(const periodic_grid& xgrid, const moment_set& prev, const moment_set& next,
                                         const VectorXd& E_prev, double tau);

struct rate_fit {
    double rate = 0.0; // negative for damping
    double t_lo = 0.0, t_hi = 0.0;
    double residual = 0.0; // RMS deviation of 1/2 log(value) from the line
    int samples = 0;
};

// Least squares line through (t, 1/2 log value) for samples in [t_lo, t_hi].
rate_fit fit_rate(const std::vector<double>& t, const std::vector<double>& value, double t_lo, double t_hi);
// Same fit restricted to local maxima. Maxima preceding the first local
// minimum in the window belong to the initial transient and are skipped.
rate_fit fit_rate_maxima(const std::vector<double>& t, const std::vector<double>& value, double t_lo, double t_hi);

// Faddeeva function w(z) = exp(-z^2) erfc(-iz), valid in the whole plane.
std::complex<double> faddeeva(std::complex<double> z);
// Plasma dispersion function Z(z) = i sqrt(pi) w(z).
std::complex<double> plasma_z(std::complex<double> z);

// Root of 1 + (1 + zeta Z(zeta))/k^2 with zeta = omega/(sqrt(2) k).
std::complex<double> landau_dispersion_rate(double k);
// Symmetric two-beam Maxwellian with drifts +-vbar (unit thermal speed).
std::complex<double> two_stream_dispersion_rate(double k, double vbar);

} // namespace vpdlr
