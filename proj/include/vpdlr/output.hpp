#pragma once

#include <vpdlr/diagnostics.hpp>

#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace vpdlr {

extern const char* const csv_columns[11];

std::string format_double(double x); // 17 significant digits

// Writes '#'-prefixed metadata, the column header and one line per record.
// Errors are measured against the first record written.
class csv_writer {
public:
    explicit csv_writer(const std::string& path);

    void metadata(const std::string& key, const std::string& value);
    void write(const diagnostics_record& rec);
    void close();

private:
    std::ofstream out_;
    std::string path_;
    bool header_done_ = false;
    bool have_first_ = false;
    diagnostics_record first_;
    void check();
};

} // namespace vpdlr
