#include "tq/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "tq/errors.hpp"

namespace tq {

void SweepTable::add_row(std::vector<std::optional<double>> row) {
    if (row.size() != columns.size())
        throw std::logic_error("row width does not match the header");
    rows.push_back(std::move(row));
}

std::string format_number(double v) {
    if (!std::isfinite(v)) throw NumericalError("non-finite value in output table");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_csv(const SweepTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            if (row[i]) out += format_number(*row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const SweepTable& table, const std::string& path) {
    const std::string text = to_csv(table);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

}  // namespace tq
