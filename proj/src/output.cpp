#include <vpdlr/output.hpp>
#include <vpdlr/errors.hpp>

#include <cmath>
#include <cstdio>

namespace vpdlr {

const char* const csv_columns[11] = {"t",
                                     "mass",
                                     "momentum",
                                     "energy_total",
                                     "energy_electric",
                                     "err_mass_rel",
                                     "err_momentum_abs",
                                     "err_energy_rel",
                                     "continuity_mass",
                                     "continuity_momentum",
                                     "ortho_defect"};

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

csv_writer::csv_writer(const std::string& path) : out_(path), path_(path) {
    if (!out_) throw error(error_kind::io_failure, "cli", "cannot open '" + path + "' for writing");
}

void csv_writer::check() {
    if (!out_) throw error(error_kind::io_failure, "cli", "write to '" + path_ + "' failed");
}

void csv_writer::metadata(const std::string& key, const std::string& value) {
    out_ << "# " << key << ": " << value << "\n";
    check();
}

void csv_writer::write(const diagnostics_record& r) {
    if (!header_done_) {
        for (int i = 0; i < 11; ++i) out_ << (i ? "," : "") << csv_columns[i];
        out_ << "\n";
        header_done_ = true;
    }
    if (!have_first_) {
        first_ = r;
        have_first_ = true;
    }
    const double vals[11] = {r.t,
                             r.mass,
                             r.momentum,
                             r.energy_total,
                             r.energy_electric,
                             std::abs(r.mass - first_.mass) / std::abs(first_.mass),
                             std::abs(r.momentum - first_.momentum),
                             std::abs(r.energy_total - first_.energy_total) / std::abs(first_.energy_total),
                             r.continuity_residual_mass,
                             r.continuity_residual_momentum,
                             r.ortho_defect};
    for (int i = 0; i < 11; ++i) out_ << (i ? "," : "") << format_double(vals[i]);
    out_ << "\n";
    check();
}

void csv_writer::close() {
    out_.flush();
    check();
    out_.close();
}

} // namespace vpdlr
