#pragma once

#include <vpdlr/config.hpp>
#include <vpdlr/lowrank.hpp>
#include <vpdlr/reference.hpp>

#include <vector>

namespace vpdlr {

struct scenario_spec {
    scenario_kind kind = scenario_kind::landau_perturbed;
    double x_length = 0.0;
    double v_max = 0.0;        // v in [-v_max, v_max]
    double alpha = 0.0;        // density perturbation amplitude
    double k = 0.0;            // perturbation wavenumber
    std::vector<double> eps;   // landau_perturbed mode amplitudes
    double vbar = 0.0;         // two_stream beam speed
    double u_amp = 0.0;        // maxwellian_shear drift amplitude
    int terms = 0;             // maxwellian_shear series length
};

scenario_spec default_spec(scenario_kind kind);

// f = f0v(v) * xf * vf^T on the grids.
struct factored_ic {
    MatrixXd xf, vf;
};

factored_ic scenario_factors(const scenario_spec& sp, const periodic_grid& xgrid, const periodic_grid& vgrid);
// Direct pointwise evaluation of the initial distribution.
double scenario_value(const scenario_spec& sp, double x, double v);

periodic_grid scenario_xgrid(const scenario_spec& sp, int nx);
periodic_grid scenario_vgrid(const scenario_spec& sp, int nv);

// Orthonormal factors reproducing xf*vf^T exactly, padded to rank r with
// Fourier modes in x and monomials in v (padded S entries are zero).
lowrank_state build_from_factors(std::shared_ptr<const discretization> disc, int r, const MatrixXd& xf,
                                 const MatrixXd& vf);

lowrank_state build_initial(const run_config& c);
full_grid_state build_initial_full(const run_config& c);

} // namespace vpdlr
