#pragma once

#include <string>
#include <vector>

namespace fibereit::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    int column(const std::string& name) const;  // -1 if absent
};

/// Reads a numeric CSV with a mandatory header line. Throws std::runtime_error
/// with a line-numbered message on malformed input.
Table read(const std::string& path);

/// Writes rows with a stable "%.17g" float format so identical data produces
/// byte-identical files.
void write(const std::string& path, const std::vector<std::string>& header,
           const std::vector<std::vector<double>>& rows);

std::string format_double(double v);

}  // namespace fibereit::csv
