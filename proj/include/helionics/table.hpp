#pragma once

#include <string>
#include <vector>

namespace helionics {

/// Format a double with 10 significant digits (the CSV emission precision).
std::string format_sig(double v, int digits = 10);

/// Minimal CSV table: header row plus pre-formatted cells. Emission is
/// UTF-8, comma-separated, "\n" line endings.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
    static Table from_csv(const std::string& text);

    /// Index of a column, -1 when absent.
    int column_index(const std::string& name) const;
};

} // namespace helionics
