#pragma once

#include <vpdlr/config.hpp>
#include <vpdlr/errors.hpp>

#include <iosfwd>

namespace vpdlr {

enum exit_code { exit_ok = 0, exit_invalid_config = 2, exit_numerical = 3, exit_io = 4 };

int exit_code_for(const error& e);

// Builds the initial value, runs the selected driver and streams records to
// c.output_path. Progress and the rate summary go to `log`. Library errors
// propagate; the caller maps them with exit_code_for.
void run(const run_config& c, std::ostream& log);

} // namespace vpdlr
