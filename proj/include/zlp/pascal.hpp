#pragma once

/**
 * @file pascal.hpp
 * @brief Binomial coefficients inside a field and the Pascal matrix families.
 *
 * With 0-based indices r (row) and c (column), every family is upper
 * triangular and, for c >= r:
 *
 *   P1(y)[r][c]   = y^(c-r) C(c, r)
 *   P2(x)[r][c]   = x^(c+r) C(c, r)
 *   Q(y,x)[r][c]  = y^(c-r) x^(c+r) C(c, r)
 *   D(a)[r][r]    = a^r
 *
 * using 0^0 = 1. Q specializes to P1 at x = 1, to P2 at y = 1 and to D(x^2)
 * at y = 0.
 */

#include <cstdint>
#include <mutex>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace zlp {

/// Rows 0..m of Pascal's triangle reduced into f. Computed with the additive
/// recurrence only, so no division by multiples of the characteristic occurs.
inline std::vector<std::vector<element>> binomial_rows(const field& f, std::uint64_t m)
{
    const auto& d = f.data();
    std::lock_guard lock(d.binomial_mutex);
    auto& rows = d.binomial_rows;
    while (rows.size() <= m) {
        const std::size_t next = rows.size();
        std::vector<detail::repr> row;
        row.reserve(next + 1);
        if (next == 0) {
            row.push_back(one(f).value());
        } else {
            const auto& prev = rows[next - 1];
            row.push_back(prev.front());
            for (std::size_t r = 1; r < next; ++r)
                row.push_back((element::from_repr(f, prev[r - 1]) + element::from_repr(f, prev[r])).value());
            row.push_back(prev.back());
        }
        rows.push_back(std::move(row));
    }
    std::vector<std::vector<element>> out;
    out.reserve(m + 1);
    for (std::uint64_t i = 0; i <= m; ++i) {
        std::vector<element> row;
        row.reserve(rows[i].size());
        for (const auto& v : rows[i]) row.push_back(element::from_repr(f, v));
        out.push_back(std::move(row));
    }
    return out;
}

/// C(m, r) in f; zero outside 0 <= r <= m.
inline element binomial(std::uint64_t m, std::int64_t r, const field& f)
{
    if (r < 0 || static_cast<std::uint64_t>(r) > m) return zero(f);
    return binomial_rows(f, m)[m][static_cast<std::size_t>(r)];
}

namespace detail {

// Q(y, x) entries with an arbitrary x; validity of x is checked by callers.
inline square_matrix zhang_liu(const element& y, const element& x, std::size_t n)
{
    const field& f = y.parent();
    if (!(x.parent() == f)) throw error(errc::mixed_fields, "y and x belong to different fields");
    const auto c = binomial_rows(f, n == 0 ? 0 : n - 1);
    std::vector<element> ypow{one(f)}, xpow{one(f)};
    for (std::size_t i = 1; i < 2 * n; ++i) {
        ypow.push_back(ypow.back() * y);
        xpow.push_back(xpow.back() * x);
    }
    return square_matrix(f, n, [&](std::size_t r, std::size_t col) {
        if (col < r) return zero(f);
        return ypow[col - r] * xpow[col + r] * c[col][r];
    });
}

inline void require_nonzero_x(const element& x)
{
    if (x.is_zero()) throw error(errc::zero_parameter, "x must be nonzero");
}

} // namespace detail

/// Generalized Pascal matrix of the first kind. y may be zero.
inline square_matrix p1_matrix(const element& y, std::size_t n)
{
    return detail::zhang_liu(y, one(y.parent()), n);
}

/// Pascal matrix of the second kind; x must be nonzero.
inline square_matrix p2_matrix(const element& x, std::size_t n)
{
    detail::require_nonzero_x(x);
    return detail::zhang_liu(one(x.parent()), x, n);
}

/// Zhang-Liu matrix Q(y, x); x must be nonzero.
inline square_matrix q_matrix(const element& y, const element& x, std::size_t n)
{
    detail::require_nonzero_x(x);
    return detail::zhang_liu(y, x, n);
}

/// diag(1, alpha, alpha^2, ..., alpha^(n-1)).
inline square_matrix d_matrix(const element& alpha, std::size_t n)
{
    const field& f = alpha.parent();
    std::vector<element> powers{one(f)};
    for (std::size_t i = 1; i < n; ++i) powers.push_back(powers.back() * alpha);
    return square_matrix(f, n, [&](std::size_t r, std::size_t c) { return r == c ? powers[r] : zero(f); });
}

} // namespace zlp
