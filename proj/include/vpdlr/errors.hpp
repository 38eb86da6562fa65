#pragma once

#include <stdexcept>
#include <string>

namespace vpdlr {

enum class error_kind {
    invalid_input,
    invalid_config,
    degenerate_basis,
    ill_conditioned,
    no_root,
    invalid_window,
    io_failure
};

const char* to_string(error_kind k);

// All library failures are reported through this type. `index` is the
// offending column for degenerate bases, `step` the time step (-1 if unknown).
class error : public std::runtime_error {
public:
    error(error_kind kind, std::string module, const std::string& what, int index = -1);

    error_kind kind() const { return kind_; }
    const std::string& module() const { return module_; }
    int index() const { return index_; }
    long step() const { return step_; }
    error with_step(long step) const;

private:
    error_kind kind_;
    std::string module_;
    int index_;
    long step_ = -1;
};

} // namespace vpdlr
