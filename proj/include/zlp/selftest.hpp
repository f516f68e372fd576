#pragma once

/**
 * @file selftest.hpp
 * @brief Packaged invariant checks over the default small fields.
 *
 * Each suite counts individual checks. A failed check records a short
 * description (the first few are kept) so that `zlp selftest` can say what
 * broke.
 */

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"
#include "order.hpp"
#include "pascal.hpp"
#include "spectral.hpp"

namespace zlp {

struct suite_report {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what)
    {
        if (ok) {
            ++passed;
            return;
        }
        ++failed;
        if (failures.size() < 5) failures.push_back(what);
    }
};

namespace detail {

inline std::vector<field> selftest_finite_fields()
{
    return {make_prime_field(2), make_prime_field(3),       make_prime_field(5),       make_prime_field(7),
            make_prime_field(13), make_extension_field(2, 2), make_extension_field(2, 3), make_extension_field(3, 2)};
}

inline std::vector<element> rational_samples()
{
    const field qq = make_rational_field();
    std::vector<element> out;
    for (const char* s : {"0", "1", "-1", "2", "-2", "1/2", "3", "-1/3", "5/7"}) out.push_back(parse_element(qq, s));
    return out;
}

// Elements of f, or a rational sample set.
inline std::vector<element> sample_elements(const field& f)
{
    return f.is_finite() ? elements(f) : rational_samples();
}

inline std::string describe(const element& y, const element& x, std::size_t n)
{
    return x.parent().spec() + " y=" + y.to_string() + " x=" + x.to_string() + " n=" + std::to_string(n);
}

// C(m, r) mod p for small m, from an exact integer triangle.
inline std::uint64_t small_binomial_mod(std::uint64_t m, std::uint64_t r, std::uint64_t p)
{
    if (r > m) return 0;
    std::vector<std::uint64_t> row{1};
    for (std::uint64_t i = 1; i <= m; ++i) {
        std::vector<std::uint64_t> nxt(i + 1, 1);
        for (std::uint64_t j = 1; j < i; ++j) nxt[j] = (row[j - 1] + row[j]) % p;
        row = std::move(nxt);
    }
    return row[r];
}

} // namespace detail

inline suite_report selftest_fields()
{
    suite_report rep;
    rep.name = "field-arithmetic";
    std::mt19937_64 rng(7);
    for (const auto& f : detail::selftest_finite_fields()) {
        for (const auto& a : elements(f)) {
            rep.check(parse_element(f, a.to_string()) == a, "round trip " + a.to_string() + " in " + f.spec());
            if (a.is_zero()) continue;
            rep.check(inv(a) * a == one(f), "inverse of " + a.to_string() + " in " + f.spec());
            const auto ord = multiplicative_order(a);
            const std::uint64_t m = ord.value();
            bool minimal = pow(a, static_cast<std::int64_t>(m)).is_one() && (f.size() - 1) % m == 0;
            for (auto l : factor_integer(m)) minimal = minimal && !pow(a, static_cast<std::int64_t>(m / l)).is_one();
            rep.check(minimal, "order of " + a.to_string() + " in " + f.spec());
            std::uniform_int_distribution<std::int64_t> ex(-10, 10);
            const auto e1 = ex(rng), e2 = ex(rng);
            rep.check(pow(a, e1 + e2) == pow(a, e1) * pow(a, e2), "power law in " + f.spec());
        }
    }
    for (const auto& a : detail::rational_samples()) {
        rep.check(parse_element(a.parent(), a.to_string()) == a, "round trip " + a.to_string() + " in qq");
        if (!a.is_zero()) rep.check(inv(a) * a == one(a.parent()), "inverse of " + a.to_string() + " in qq");
    }
    return rep;
}

inline suite_report selftest_pascal()
{
    suite_report rep;
    rep.name = "pascal-identities";
    auto fields = detail::selftest_finite_fields();
    fields.push_back(make_rational_field());
    for (const auto& f : fields) {
        const auto samples = detail::sample_elements(f);
        for (std::size_t n : {1u, 3u, 5u}) {
            for (const auto& a : samples) {
                const auto pa = p1_matrix(a, n);
                rep.check(pa * p1_matrix(-a, n) == identity(f, n), "P1 inverse " + f.spec());
                rep.check(pa.is_upper_triangular(), "P1 triangular " + f.spec());
                rep.check(d_matrix(a, n).is_upper_triangular(), "D triangular " + f.spec());
                for (const auto& b : samples) {
                    rep.check(pa * p1_matrix(b, n) == p1_matrix(a + b, n), "P1 additive law " + f.spec());
                    rep.check(d_matrix(a, n) * d_matrix(b, n) == d_matrix(a * b, n), "D multiplicative " + f.spec());
                    if (b.is_zero()) continue;
                    const auto q = q_matrix(a, b, n);
                    rep.check(q.is_upper_triangular(), "Q triangular " + f.spec());
                    rep.check(q_matrix(a, one(f), n) == pa, "Q(y,1) = P1(y) " + f.spec());
                    rep.check(q_matrix(one(f), b, n) == p2_matrix(b, n), "Q(1,x) = P2(x) " + f.spec());
                    rep.check(q_matrix(zero(f), b, n) == d_matrix(b * b, n), "Q(0,x) = D(x^2) " + f.spec());
                }
                rep.check(pow(d_matrix(a, n), 3) == d_matrix(pow(a, 3), n), "D power " + f.spec());
            }
        }
        for (std::uint64_t m = 1; m <= 12; ++m)
            for (std::int64_t r = 0; r <= static_cast<std::int64_t>(m); ++r)
                rep.check(binomial(m, r, f) == binomial(m - 1, r - 1, f) + binomial(m - 1, r, f),
                          "Pascal recurrence " + f.spec());
    }
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 13u}) {
        const field f = make_prime_field(p);
        for (int t = 0; t < 40; ++t) {
            const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(0, 200)(rng);
            const std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, m)(rng);
            std::uint64_t lucas = 1, mm = m, rr = r;
            while (mm || rr) {
                lucas = lucas * detail::small_binomial_mod(mm % p, rr % p, p) % p;
                mm /= p;
                rr /= p;
            }
            rep.check(binomial(m, static_cast<std::int64_t>(r), f) == element::from_integer(f, static_cast<std::int64_t>(lucas)),
                      "Lucas C(" + std::to_string(m) + "," + std::to_string(r) + ") mod " + std::to_string(p));
        }
    }
    return rep;
}

inline suite_report selftest_factorization()
{
    suite_report rep;
    rep.name = "factorization";
    auto fields = detail::selftest_finite_fields();
    fields.push_back(make_rational_field());
    for (const auto& f : fields) {
        const auto samples = detail::sample_elements(f);
        for (std::size_t n = 2; n <= 6; ++n) {
            for (const auto& x : samples) {
                if (x.is_zero() || (x * x).is_one()) continue;
                for (const auto& y : samples) {
                    const auto d = factorize_q(y, x, n);
                    rep.check(verify_factorization(d), "factorization " + detail::describe(y, x, n));
                    const auto q = q_matrix(y, x, n);
                    bool eig = true;
                    for (const auto& ep : eigenpairs(y, x, n)) {
                        std::vector<element> lv;
                        for (const auto& v : ep.vector) lv.push_back(ep.value * v);
                        eig = eig && q * std::span<const element>(ep.vector) == lv;
                    }
                    rep.check(eig, "eigenpairs " + detail::describe(y, x, n));
                    if (n == 2) {
                        rep.check(z_parameter(y, x) == -z_parameter(-y, x), "z antisymmetry " + detail::describe(y, x, n));
                    }
                }
                rep.check(z_parameter(zero(f), x).is_zero(), "z(0,x) = 0 in " + f.spec());
            }
        }
    }
    return rep;
}

inline suite_report selftest_diagonalizability()
{
    suite_report rep;
    rep.name = "diagonalizability";
    auto fields = detail::selftest_finite_fields();
    fields.push_back(make_rational_field());
    for (const auto& f : fields) {
        const auto samples = detail::sample_elements(f);
        for (std::size_t n = 2; n <= 5; ++n)
            for (const auto& x : samples) {
                if (x.is_zero()) continue;
                for (const auto& y : samples)
                    rep.check(is_diagonalizable(y, x, n) == diagonalizable_oracle(q_matrix(y, x, n)),
                              "criterion vs oracle " + detail::describe(y, x, n));
            }
    }
    return rep;
}

inline suite_report selftest_order()
{
    suite_report rep;
    rep.name = "order";
    for (const auto& f : detail::selftest_finite_fields()) {
        const auto all = elements(f);
        for (const auto& x : all) {
            if (x.is_zero()) continue;
            for (const auto& y : all) {
                const auto formula = q_order(y, x, 2);
                for (std::size_t n = 2; n <= 4; ++n) {
                    const auto q = q_matrix(y, x, n);
                    rep.check(q_order(y, x, n) == formula, "dimension independence " + detail::describe(y, x, n));
                    rep.check(matrix_order_bruteforce(q, default_cap(f, n)) == bruteforce_result{formula},
                              "formula vs brute force " + detail::describe(y, x, n));
                    rep.check(is_exact_order(q, formula.value()), "minimality " + detail::describe(y, x, n));
                }
            }
            rep.check(p2_order(x, 3) == q_order(one(f), x, 3), "P2 order " + f.spec());
            rep.check(p1_order(x, 3) == q_order(x, one(f), 3), "P1 order " + f.spec());
        }
    }
    const field qq = make_rational_field();
    for (const auto& x : detail::rational_samples()) {
        if (x.is_zero()) continue;
        for (const auto& y : detail::rational_samples()) {
            const bool is_identity = y.is_zero() && (x * x).is_one();
            rep.check(q_order(y, x, 2).is_finite() == is_identity, "rational order " + detail::describe(y, x, 2));
        }
    }
    return rep;
}

inline std::vector<suite_report> run_selftest()
{
    return {selftest_fields(), selftest_pascal(), selftest_factorization(), selftest_diagonalizability(),
            selftest_order()};
}

} // namespace zlp
