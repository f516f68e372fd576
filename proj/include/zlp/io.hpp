#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "order.hpp"
#include "spectral.hpp"

namespace zlp {

using json = nlohmann::json;

/// Splits a comma-separated list at bracket depth 0, so "[1,0],2" gives two items.
inline std::vector<std::string> split_top_level(std::string_view text)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (depth < 0) throw error(errc::parse_error, "unbalanced brackets in '" + std::string(text) + "'");
        if (c == ',' && depth == 0) {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw error(errc::parse_error, "unbalanced brackets in '" + std::string(text) + "'");
    out.push_back(std::move(cur));
    return out;
}

/// One line per row: "[e00,e01,...]".
inline std::string to_text(const square_matrix& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += '[';
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) s += ',';
            s += m(i, j).to_string();
        }
        s += "]\n";
    }
    return s;
}

inline json rows_json(const square_matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (const auto& e : m.row(i)) row.push_back(e.to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const square_matrix& m)
{
    return json{{"field", m.parent().spec()}, {"n", m.size()}, {"entries", rows_json(m)}};
}

inline square_matrix matrix_from_json(const json& j)
{
    try {
        const field f = parse_field(j.at("field").get<std::string>());
        const auto n = j.at("n").get<std::size_t>();
        const auto& rows = j.at("entries");
        if (rows.size() != n) throw error(errc::parse_error, "row count differs from n");
        std::vector<element> entries;
        entries.reserve(n * n);
        for (const auto& row : rows) {
            if (row.size() != n) throw error(errc::parse_error, "row length differs from n");
            for (const auto& e : row) entries.push_back(parse_element(f, e.get<std::string>()));
        }
        return square_matrix(f, std::move(entries));
    } catch (const json::exception& e) {
        throw error(errc::parse_error, std::string("malformed matrix JSON: ") + e.what());
    }
}

inline json to_json(const order_result& r)
{
    if (r.is_finite()) return json{{"order", r.value()}};
    return json{{"order", "infinite"}};
}

inline json to_json(const bruteforce_result& r)
{
    if (auto e = std::get_if<exceeded>(&r)) return json{{"order", "exceeded"}, {"cap", e->cap}};
    return to_json(std::get<order_result>(r));
}

inline std::string to_string(const bruteforce_result& r)
{
    if (auto e = std::get_if<exceeded>(&r)) return "exceeded(" + std::to_string(e->cap) + ")";
    return std::get<order_result>(r).to_string();
}

inline json to_json(const decomposition& d, bool verified)
{
    return json{{"field", d.z.parent().spec()},
                {"n", d.n},
                {"y", d.source_y.to_string()},
                {"x", d.source_x.to_string()},
                {"z", d.z.to_string()},
                {"left", rows_json(d.left)},
                {"middle", rows_json(d.middle)},
                {"right", rows_json(d.right)},
                {"verified", verified}};
}

/// RFC 4180 quoting for fields containing commas, quotes or newlines.
inline std::string csv_escape(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace zlp
