#include <vpdlr/errors.hpp>

namespace vpdlr {

const char* to_string(error_kind k) {
    switch (k) {
    case error_kind::invalid_input: return "invalid-input";
    case error_kind::invalid_config: return "invalid-config";
    case error_kind::degenerate_basis: return "degenerate-basis";
    case error_kind::ill_conditioned: return "ill-conditioned";
    case error_kind::no_root: return "no-root";
    case error_kind::invalid_window: return "invalid-window";
    case error_kind::io_failure: return "io-failure";
    }
    return "unknown";
}

error::error(error_kind kind, std::string module, const std::string& what, int index)
    : std::runtime_error(what), kind_(kind), module_(std::move(module)), index_(index) {}

error error::with_step(long step) const {
    error e = *this;
    e.step_ = step;
    return e;
}

} // namespace vpdlr
