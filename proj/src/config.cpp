#include <vpdlr/config.hpp>
#include <vpdlr/errors.hpp>
#include <vpdlr/fft.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace vpdlr {

const char* to_string(scenario_kind s) {
    switch (s) {
    case scenario_kind::landau_perturbed: return "landau_perturbed";
    case scenario_kind::maxwellian_shear: return "maxwellian_shear";
    case scenario_kind::landau_rank1: return "landau_rank1";
    case scenario_kind::two_stream: return "two_stream";
    }
    return "?";
}

const char* to_string(stepper_choice s) {
    switch (s) {
    case stepper_choice::conservative_euler: return "conservative_euler";
    case stepper_choice::unconventional: return "unconventional";
    case stepper_choice::reference: return "reference";
    }
    return "?";
}

scenario_kind parse_scenario(const std::string& s) {
    for (auto k : {scenario_kind::landau_perturbed, scenario_kind::maxwellian_shear, scenario_kind::landau_rank1,
                   scenario_kind::two_stream})
        if (s == to_string(k)) return k;
    throw error(error_kind::invalid_config, "cli", "unknown scenario '" + s + "'");
}

stepper_choice parse_stepper(const std::string& s) {
    for (auto k : {stepper_choice::conservative_euler, stepper_choice::unconventional, stepper_choice::reference})
        if (s == to_string(k)) return k;
    throw error(error_kind::invalid_config, "cli", "unknown stepper '" + s + "'");
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& v) {
    T out{};
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
        throw error(error_kind::invalid_config, "cli", "bad value '" + v + "' for " + key);
    return out;
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

run_config parse_config(const std::string& text) { return parse_config(text, run_config{}); }

run_config parse_config(const std::string& text, run_config c) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw error(error_kind::invalid_config, "cli", "line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "scenario") c.scenario = parse_scenario(val);
        else if (key == "stepper") c.stepper = parse_stepper(val);
        else if (key == "r") c.r = parse_number<int>(key, val);
        else if (key == "m") c.m = parse_number<int>(key, val);
        else if (key == "nx") c.nx = parse_number<int>(key, val);
        else if (key == "nv") c.nv = parse_number<int>(key, val);
        else if (key == "tau") c.tau = parse_number<double>(key, val);
        else if (key == "t-final" || key == "t_final") c.t_final = parse_number<double>(key, val);
        else if (key == "stride") c.record_stride = parse_number<int>(key, val);
        else if (key == "out") c.output_path = val;
        else if (key == "seed") c.seed = parse_number<unsigned>(key, val);
        else throw error(error_kind::invalid_config, "cli", "unknown key '" + key + "'");
    }
    return c;
}

std::string serialize_config(const run_config& c) {
    std::ostringstream o;
    o << "scenario=" << to_string(c.scenario) << "\n"
      << "stepper=" << to_string(c.stepper) << "\n"
      << "r=" << c.r << "\n"
      << "m=" << c.m << "\n"
      << "nx=" << c.nx << "\n"
      << "nv=" << c.nv << "\n"
      << "tau=" << fmt_double(c.tau) << "\n"
      << "t-final=" << fmt_double(c.t_final) << "\n"
      << "stride=" << c.record_stride << "\n"
      << "out=" << c.output_path << "\n"
      << "seed=" << c.seed << "\n";
    return o.str();
}

run_config resolve_defaults(run_config c) {
    const bool reference = c.stepper == stepper_choice::reference;
    if (c.r == 0)
        c.r = (c.scenario == scenario_kind::landau_perturbed || c.scenario == scenario_kind::maxwellian_shear) ? 6 : 10;
    if (c.nx == 0) c.nx = reference ? 512 : 128;
    if (c.nv == 0) c.nv = reference ? 512 : 128;
    if (c.tau == 0.0) {
        switch (c.stepper) {
        case stepper_choice::conservative_euler: c.tau = 1e-4; break;
        case stepper_choice::unconventional: c.tau = 1e-3; break;
        case stepper_choice::reference: c.tau = 1e-2; break;
        }
    }
    if (c.t_final == 0.0) {
        switch (c.scenario) {
        case scenario_kind::landau_perturbed: c.t_final = 5.0; break;
        case scenario_kind::maxwellian_shear: c.t_final = 5.0; break;
        case scenario_kind::landau_rank1: c.t_final = 15.0; break;
        case scenario_kind::two_stream: c.t_final = 40.0; break;
        }
    }
    return c;
}

void validate_config(const run_config& c) {
    auto fail = [](const std::string& msg) { throw error(error_kind::invalid_config, "cli", msg); };
    if (c.m < 0 || c.m > 3) fail("m must lie in 0..3");
    if (c.r < 1) fail("rank must be positive");
    if (c.m > c.r) fail("m must not exceed r");
    if (!is_power_of_two(c.nx) || !is_power_of_two(c.nv)) fail("grid sizes must be powers of two");
    if (c.nx < 4 || c.nv < 4) fail("grid sizes must be at least 4");
    if (!(c.tau > 0.0) || !std::isfinite(c.tau)) fail("tau must be positive");
    if (!(c.t_final >= 0.0) || !std::isfinite(c.t_final)) fail("t-final must be non-negative");
    if (c.record_stride < 1) fail("stride must be at least 1");
    if (c.output_path.empty()) fail("output path is empty");
}

} // namespace vpdlr
