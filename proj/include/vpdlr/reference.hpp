#pragma once

#include <vpdlr/diagnostics.hpp>
#include <vpdlr/grid.hpp>

#include <functional>

namespace vpdlr {

// Full-grid distribution; f(i, j) = f(x_i, v_j) including the Maxwellian.
struct full_grid_state {
    periodic_grid xgrid, vgrid;
    MatrixXd f;
    double t = 0.0;
};

moment_set moments_full(const full_grid_state& s);
VectorXd field_full(const full_grid_state& s);

// Substeps on the grids of s: f(x, v_j) <- f(x - v_j dt, v_j) and
// f(x_i, v) <- f(x_i, v + E_i dt).
void advect_x(const full_grid_state& s, MatrixXd& f, double dt);
void advect_v(const full_grid_state& s, MatrixXd& f, const VectorXd& E, double dt);

// Strang splitting: half x-advection, Poisson solve, full v-advection
// f(x, v + E tau), half x-advection. All shifts are Fourier phase shifts.
// Negative tau runs the scheme backwards.
full_grid_state semi_lagrangian_step(const full_grid_state& s, double tau);

using full_record_sink = std::function<void(const diagnostics_record&)>;

full_grid_state run_reference(const full_grid_state& s0, double tau, double t_final, const full_record_sink& sink,
                              int stride = 1);

} // namespace vpdlr
