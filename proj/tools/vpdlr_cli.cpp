#include <vpdlr/config.hpp>
#include <vpdlr/errors.hpp>
#include <vpdlr/run.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"Conservative dynamical low-rank Vlasov-Poisson simulator"};

    std::optional<std::string> scenario, stepper, out, config;
    std::optional<int> r, m, nx, nv, stride;
    std::optional<double> tau, t_final;
    app.add_option("--scenario", scenario, "landau_perturbed | maxwellian_shear | landau_rank1 | two_stream");
    app.add_option("--stepper", stepper, "conservative_euler | unconventional | reference");
    app.add_option("--r", r, "rank");
    app.add_option("--m", m, "number of frozen velocity basis functions (0..3)");
    app.add_option("--nx", nx, "x grid points (power of two)");
    app.add_option("--nv", nv, "v grid points (power of two)");
    app.add_option("--tau", tau, "time step");
    app.add_option("--t-final", t_final, "final time");
    app.add_option("--stride", stride, "record every n-th step");
    app.add_option("--out", out, "CSV output path");
    app.add_option("--config", config, "key=value file; flags override it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : vpdlr::exit_invalid_config;
    }

    try {
        vpdlr::run_config c;
        if (config) {
            std::ifstream in(*config);
            if (!in) throw vpdlr::error(vpdlr::error_kind::io_failure, "cli", "cannot read config file '" + *config + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            c = vpdlr::parse_config(buf.str());
        }
        if (scenario) c.scenario = vpdlr::parse_scenario(*scenario);
        if (stepper) c.stepper = vpdlr::parse_stepper(*stepper);
        if (r) c.r = *r;
        if (m) c.m = *m;
        if (nx) c.nx = *nx;
        if (nv) c.nv = *nv;
        if (tau) c.tau = *tau;
        if (t_final) c.t_final = *t_final;
        if (stride) c.record_stride = *stride;
        if (out) c.output_path = *out;
        vpdlr::run(c, std::cout);
    } catch (const vpdlr::error& e) {
        std::cerr << "error: module=" << e.module() << " kind=" << vpdlr::to_string(e.kind());
        if (e.step() >= 0) std::cerr << " step=" << e.step();
        if (e.index() >= 0) std::cerr << " index=" << e.index();
        std::cerr << ": " << e.what() << "\n";
        return vpdlr::exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: module=cli kind=internal: " << e.what() << "\n";
        return vpdlr::exit_numerical;
    }
    return vpdlr::exit_ok;
}
