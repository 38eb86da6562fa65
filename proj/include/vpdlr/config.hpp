#pragma once

#include <string>

namespace vpdlr {

enum class scenario_kind { landau_perturbed, maxwellian_shear, landau_rank1, two_stream };
enum class stepper_choice { conservative_euler, unconventional, reference };

const char* to_string(scenario_kind s);
const char* to_string(stepper_choice s);
scenario_kind parse_scenario(const std::string& s);
stepper_choice parse_stepper(const std::string& s);

// Zero in r, nx, nv, tau or t_final means "use the scenario/stepper default".
struct run_config {
    scenario_kind scenario = scenario_kind::landau_perturbed;
    stepper_choice stepper = stepper_choice::conservative_euler;
    int r = 0;
    int m = 3;
    int nx = 0;
    int nv = 0;
    double tau = 0.0;
    double t_final = 0.0;
    int record_stride = 1;
    std::string output_path = "run.csv";
    unsigned seed = 0;
};

// key=value per line, '#' starts a comment. Keys match the long CLI flags
// without dashes (t-final and t_final both accepted).
run_config parse_config(const std::string& text);
run_config parse_config(const std::string& text, run_config base);
std::string serialize_config(const run_config& c);

run_config resolve_defaults(run_config c);
// Throws invalid-config.
void validate_config(const run_config& c);

} // namespace vpdlr
