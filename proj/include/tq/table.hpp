#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tq {

// Labeled columnar numbers headed for CSV. Cells are optional: quantities
// that are undefined at a grid point emit an empty field. Finite values
// only; a NaN or infinity fails serialization.
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;

    void add_row(std::vector<std::optional<double>> row);
};

// Deterministic 12-significant-digit formatting ('.' decimal point).
std::string format_number(double v);

// Single header row, ',' separators, '\n' line endings.
std::string to_csv(const SweepTable& table);

// Writes to the path, or to stdout when path is empty.
void write_csv(const SweepTable& table, const std::string& path);

}  // namespace tq
