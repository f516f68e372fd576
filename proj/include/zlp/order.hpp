#pragma once

/**
 * @file order.hpp
 * @brief Multiplicative order of Zhang-Liu matrices.
 *
 * q_order() evaluates the closed formula:
 *
 * - x^2 != 1: the order of x^2 in the field (infinite over the rationals)
 * - x^2 = 1, y = 0: Q = I, order 1
 * - x^2 = 1, y != 0: the characteristic, or infinite in characteristic 0
 *
 * q_order_bruteforce() multiplies Q by itself until the identity appears and
 * is kept free of any knowledge of the formula.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <variant>

#include "error.hpp"
#include "field.hpp"
#include "integer.hpp"
#include "matrix.hpp"
#include "pascal.hpp"

namespace zlp {

/// Brute force gave up after `cap` powers.
struct exceeded {
    std::uint64_t cap;
    friend bool operator==(const exceeded&, const exceeded&) = default;
};

using bruteforce_result = std::variant<order_result, exceeded>;

inline order_result q_order(const element& y, const element& x, std::size_t n)
{
    require_min_dimension(n);
    detail::require_nonzero_x(x);
    if (!(y.parent() == x.parent())) throw error(errc::mixed_fields, "y and x belong to different fields");
    const element alpha = x * x;
    if (!alpha.is_one()) return multiplicative_order(alpha);
    if (y.is_zero()) return order_result::finite(1);
    const std::uint64_t p = x.parent().characteristic();
    return p > 0 ? order_result::finite(p) : order_result::infinite();
}

/// characteristic * q^n for finite fields (saturating), 1000 for the rationals.
inline std::uint64_t default_cap(const field& f, std::size_t n)
{
    if (!f.is_finite()) return 1000;
    return saturating_mul(f.characteristic(), saturating_pow(f.size(), n));
}

/// Smallest m in [1, cap] with m_matrix^m = I, or exceeded{cap}.
inline bruteforce_result matrix_order_bruteforce(const square_matrix& m, std::uint64_t cap)
{
    if (cap == 0) throw error(errc::invalid_argument, "cap must be positive");
    square_matrix power = m;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (power.is_identity()) return order_result::finite(k);
        if (k < cap) power = power * m;
    }
    return exceeded{cap};
}

inline bruteforce_result q_order_bruteforce(const element& y, const element& x, std::size_t n, std::uint64_t cap)
{
    require_min_dimension(n);
    return matrix_order_bruteforce(q_matrix(y, x, n), cap);
}

inline bruteforce_result q_order_bruteforce(const element& y, const element& x, std::size_t n)
{
    return q_order_bruteforce(y, x, n, default_cap(x.parent(), n));
}

/// Order of P1(y): 1 at y = 0, else the characteristic (infinite over Q).
inline order_result p1_order(const element& y, std::size_t n)
{
    require_min_dimension(n);
    if (y.is_zero()) return order_result::finite(1);
    const std::uint64_t p = y.parent().characteristic();
    return p > 0 ? order_result::finite(p) : order_result::infinite();
}

/// Order of P2(x) = Q(1, x).
inline order_result p2_order(const element& x, std::size_t n) { return q_order(one(x.parent()), x, n); }

/// Whether a brute-force outcome is consistent with the formula. Running out
/// of cap only counts as agreement when the formula says the order is larger.
inline bool agrees(const order_result& formula, const bruteforce_result& oracle)
{
    if (auto e = std::get_if<exceeded>(&oracle)) return !formula.is_finite() || formula.value() > e->cap;
    return std::get<order_result>(oracle) == formula;
}

/// True iff m^order = I and m^(order/l) != I for every prime l dividing order.
inline bool is_exact_order(const square_matrix& m, std::uint64_t order)
{
    if (order == 0 || !pow(m, order).is_identity()) return false;
    auto primes = factor_integer(order);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return std::none_of(primes.begin(), primes.end(), [&](std::uint64_t l) { return pow(m, order / l).is_identity(); });
}

} // namespace zlp
