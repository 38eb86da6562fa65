#pragma once

#include <vpdlr/diagnostics.hpp>
#include <vpdlr/lowrank.hpp>

#include <functional>

namespace vpdlr {

struct step_report {
    double t_new = 0.0;
    lowrank_state state_new;
    VectorXd E_new;
    double continuity_residual_mass = 0.0;
    double continuity_residual_momentum = 0.0;
    double ortho_defect_before_fix = 0.0;
};

// Euler path refuses S with condition number above this.
inline constexpr double max_condition = 1e12;

step_report conservative_euler_step(const lowrank_state& s, double tau, double t = 0.0);
step_report unconventional_step(const lowrank_state& s, double tau, double t = 0.0);

enum class stepper_kind { conservative_euler, unconventional };

using record_sink = std::function<void(const diagnostics_record&)>;

// Steps round(t_final/tau) times and hands a record to `sink` at step 0,
// every `stride` steps and after the final step. Continuity residuals in a
// record are the maximum over the steps since the previous record.
lowrank_state run_simulation(const lowrank_state& s0, double tau, double t_final, stepper_kind stepper,
                             const record_sink& sink, int stride = 1);

} // namespace vpdlr
