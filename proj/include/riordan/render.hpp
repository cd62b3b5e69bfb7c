#pragma once

// Text renderings of triangles: aligned table, CSV and JSON, plus readers
// for each so output can be parsed back into the exact rationals.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace riordan {

enum class Format { table, csv, json };

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "table") return Format::table;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    return std::nullopt;
}

/**
 * Right-aligned columns, two spaces apart. With `row_sums`, each row gets a
 * trailing "| s" column.
 */
inline std::string render_table(const TriMatrix& t, const std::vector<Rational>* row_sums = nullptr) {
    std::vector<std::size_t> width(t.size(), 0);
    for (std::size_t n = 0; n < t.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            width[k] = std::max(width[k], t.entry(n, k).to_string().size());
        }
    }
    std::ostringstream os;
    for (std::size_t n = 0; n < t.size(); ++n) {
        std::string line;
        for (std::size_t k = 0; k <= n; ++k) {
            const std::string cell = t.entry(n, k).to_string();
            if (k > 0) {
                line += "  ";
            }
            line += std::string(width[k] - cell.size(), ' ') + cell;
        }
        if (row_sums != nullptr) {
            std::size_t pad = 0;
            for (std::size_t k = n + 1; k < t.size(); ++k) {
                pad += width[k] + 2;
            }
            line += std::string(pad, ' ') + "  | " + (*row_sums)[n].to_string();
        }
        os << line << '\n';
    }
    return os.str();
}

inline std::string render_csv(const TriMatrix& t) {
    std::ostringstream os;
    for (const auto& row : t.rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            os << (k ? "," : "") << row[k];
        }
        os << '\n';
    }
    return os.str();
}

inline nlohmann::json rows_json(const TriMatrix& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) {
            r.push_back(v.to_string());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline nlohmann::json coeffs_json(const TruncSeries& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : s.coeffs()) {
        out.push_back(c.to_string());
    }
    return out;
}

// {"rows": [[...]], "g": expr, "f_coeffs": [...], "order": N}
inline nlohmann::json triangle_json(const TriMatrix& t, std::string_view g_expr, const TruncSeries& f,
                                    std::size_t order) {
    return {{"rows", rows_json(t)}, {"g", std::string(g_expr)}, {"f_coeffs", coeffs_json(f)}, {"order", order}};
}

namespace detail {

inline TriMatrix triangle_from_cells(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : cells) {
        std::vector<Rational> row;
        for (const auto& c : r) {
            row.push_back(Rational::parse(c));
        }
        rows.push_back(std::move(row));
    }
    return TriMatrix(std::move(rows));
}

} // namespace detail

inline TriMatrix read_csv(std::string_view text) {
    std::vector<std::vector<std::string>> cells;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            row.push_back(cell);
        }
        cells.push_back(std::move(row));
    }
    return detail::triangle_from_cells(cells);
}

// Reads render_table output; a trailing "| sum" column is ignored.
inline TriMatrix read_table(std::string_view text) {
    std::vector<std::vector<std::string>> cells;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto bar = line.find('|');
        if (bar != std::string::npos) {
            line.resize(bar);
        }
        std::istringstream ls(line);
        std::vector<std::string> row;
        std::string cell;
        while (ls >> cell) {
            row.push_back(cell);
        }
        if (!row.empty()) {
            cells.push_back(std::move(row));
        }
    }
    return detail::triangle_from_cells(cells);
}

inline TriMatrix read_json_rows(const nlohmann::json& j) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : j.at("rows")) {
        cells.push_back(r.get<std::vector<std::string>>());
    }
    return detail::triangle_from_cells(cells);
}

} // namespace riordan
