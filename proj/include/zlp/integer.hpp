#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "error.hpp"

namespace zlp {

/// Largest field size accepted for finite fields. Trial division of q - 1
/// stays below 2^20 steps under this bound.
inline constexpr std::uint64_t max_field_size = std::uint64_t{1} << 40;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Prime factors of m with multiplicity, ascending. factor_integer(1) is empty.
inline std::vector<std::uint64_t> factor_integer(std::uint64_t m)
{
    if (m == 0) throw error(errc::zero_element, "factor_integer: m must be >= 1");
    std::vector<std::uint64_t> primes;
    while (m % 2 == 0) {
        primes.push_back(2);
        m /= 2;
    }
    for (std::uint64_t d = 3; d <= m / d; d += 2) {
        while (m % d == 0) {
            primes.push_back(d);
            m /= d;
        }
    }
    if (m > 1) primes.push_back(m);
    return primes;
}

/// base^exp, saturating at the maximum uint64 value.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept
{
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > top / base) return top;
        r *= base;
    }
    return r;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept
{
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    if (a != 0 && b > top / a) return top;
    return a * b;
}

} // namespace zlp
