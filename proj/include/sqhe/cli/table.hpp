#pragma once

// Column table and its CSV rendering: '#'-prefixed metadata lines, one
// header row, then rows with 12 significant digits.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqhe::cli {

inline constexpr const char* kToolVersion = "1.0.0";

struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> footer;

    void add_meta(std::string key, std::string value) {
        meta.emplace_back(std::move(key), std::move(value));
    }

    void add_row(std::vector<double> row) {
        if (row.size() != columns.size()) {
            throw std::logic_error("row width does not match the header");
        }
        rows.push_back(std::move(row));
    }

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (columns[i] == name) return i;
        }
        throw std::out_of_range("no column '" + name + "'");
    }
};

inline std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // folds -0 as well
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline void write_csv(std::ostream& out, const Table& t) {
    for (const auto& [k, v] : t.meta) out << "# " << k << " = " << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out << (i ? "," : "") << t.columns[i];
    }
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_number(row[i]);
        }
        out << '\n';
    }
    for (const auto& [k, v] : t.footer) out << "# " << k << " = " << v << '\n';
}

}  // namespace sqhe::cli
