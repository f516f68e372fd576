#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <zlp/zlp.hpp>

#include "oracle.hpp"

namespace testing_helpers {

inline zlp::element el(const zlp::field& f, const std::string& text) { return zlp::parse_element(f, text); }
inline zlp::element el(const zlp::field& f, std::int64_t v) { return zlp::element::from_integer(f, v); }

/// Matrix of integer literals over a prime field or the rationals.
inline zlp::square_matrix mat(const zlp::field& f, const std::vector<std::vector<std::int64_t>>& rows)
{
    std::vector<zlp::element> entries;
    for (const auto& r : rows)
        for (auto v : r) entries.push_back(el(f, v));
    return zlp::square_matrix(f, std::move(entries));
}

inline oracle::table to_table(const zlp::square_matrix& m)
{
    oracle::table t(m.size(), std::vector<std::int64_t>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) t[i][j] = static_cast<std::int64_t>(m(i, j).index());
    return t;
}

inline std::vector<zlp::field> finite_test_fields()
{
    return {zlp::make_prime_field(2),       zlp::make_prime_field(3),       zlp::make_prime_field(5),
            zlp::make_prime_field(7),       zlp::make_prime_field(13),      zlp::make_extension_field(2, 2),
            zlp::make_extension_field(2, 3), zlp::make_extension_field(3, 2)};
}

} // namespace testing_helpers
