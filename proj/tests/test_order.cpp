#include <random>

#include <gtest/gtest.h>

#include <zlp/order.hpp>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace zlp;
using testing_helpers::el;

TEST(QOrder, Examples)
{
    const auto f3 = make_prime_field(3);
    const auto f5 = make_prime_field(5);
    const auto f7 = make_prime_field(7);
    const auto qq = make_rational_field();
    EXPECT_EQ(q_order(el(f5, 1), el(f5, 2), 3), order_result::finite(2));
    EXPECT_EQ(q_order(el(f3, 1), el(f3, 1), 2), order_result::finite(3));
    EXPECT_EQ(q_order(el(qq, 1), el(qq, 2), 2), order_result::infinite());
    EXPECT_EQ(q_order(el(f7, 3), el(f7, 2), 2), order_result::finite(3));
    EXPECT_EQ(q_order(el(f3, 0), el(f3, 2), 2), order_result::finite(1));
    EXPECT_EQ(q_order(el(qq, 0), el(qq, -1), 2), order_result::finite(1));
    EXPECT_EQ(q_order(el(qq, 3), el(qq, -1), 2), order_result::infinite());
    EXPECT_THROW(q_order(one(f5), zero(f5), 2), zlp::error);
    EXPECT_THROW(q_order(one(f5), one(f5), 1), zlp::error);
}

TEST(QOrderBruteforce, Examples)
{
    const auto f7 = make_prime_field(7);
    const auto qq = make_rational_field();
    EXPECT_EQ(q_order_bruteforce(el(f7, 3), el(f7, 2), 2, 100), bruteforce_result{order_result::finite(3)});
    for (const auto& f : testing_helpers::finite_test_fields())
        EXPECT_EQ(q_order_bruteforce(zero(f), one(f), 4, 10), bruteforce_result{order_result::finite(1)});
    EXPECT_EQ(q_order_bruteforce(el(qq, 1), el(qq, 2), 2, 1000), bruteforce_result{exceeded{1000}});
    EXPECT_EQ(q_order_bruteforce(el(f7, 3), el(f7, 2), 2, 2), bruteforce_result{exceeded{2}});
    EXPECT_THROW(q_order_bruteforce(one(f7), zero(f7), 2, 10), zlp::error);
}

TEST(QOrderBruteforce, DefaultCap)
{
    EXPECT_EQ(default_cap(make_prime_field(5), 2), 5u * 25u);
    EXPECT_EQ(default_cap(make_extension_field(2, 2), 3), 2u * 64u);
    EXPECT_EQ(default_cap(make_prime_field(1000003), 6), std::numeric_limits<std::uint64_t>::max());
    EXPECT_EQ(default_cap(make_rational_field(), 2), 1000u);
}

TEST(P1Order, Examples)
{
    const auto f5 = make_prime_field(5);
    const auto qq = make_rational_field();
    EXPECT_EQ(p1_order(zero(f5), 3), order_result::finite(1));
    EXPECT_EQ(p1_order(zero(qq), 3), order_result::finite(1));
    EXPECT_EQ(p1_order(el(f5, 2), 3), order_result::finite(5));
    EXPECT_EQ(p1_order(el(qq, 1), 2), order_result::infinite());
    EXPECT_EQ(matrix_order_bruteforce(p1_matrix(el(f5, 2), 3), 100), bruteforce_result{order_result::finite(5)});
}

TEST(P2Order, Examples)
{
    const auto f5 = make_prime_field(5);
    const auto f7 = make_prime_field(7);
    EXPECT_EQ(p2_order(el(f7, 2), 2), order_result::finite(3));
    EXPECT_EQ(pow(p2_matrix(el(f7, 2), 2), 3), identity(f7, 2));
    EXPECT_EQ(p2_order(el(f5, 1), 2), order_result::finite(5));
    EXPECT_EQ(p2_order(el(f5, 3), 2), order_result::finite(2));
    EXPECT_EQ(p2_order(el(make_rational_field(), -1), 2), order_result::infinite());
}

TEST(QOrder, FormulaMatchesIntegerBruteforce)
{
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        const auto f = make_prime_field(static_cast<std::uint64_t>(p));
        for (unsigned n = 2; n <= 6; ++n)
            for (std::int64_t x = 1; x < p; ++x)
                for (std::int64_t y = 0; y < p; ++y) {
                    const auto expect = oracle::order_bruteforce(oracle::zhang_liu_mod(y, x, n, p), p, 1000);
                    ASSERT_GT(expect, 0u);
                    EXPECT_EQ(q_order(el(f, y), el(f, x), n).value(), expect)
                        << "p=" << p << " y=" << y << " x=" << x << " n=" << n;
                }
    }
}

TEST(QOrder, ExtensionFieldsMatchBruteforceAndAreMinimal)
{
    for (const char* spec : {"gf:2^2", "gf:2^3", "gf:3^2"}) {
        const auto f = parse_field(spec);
        for (std::size_t n = 2; n <= 6; ++n)
            for (const auto& x : elements(f)) {
                if (x.is_zero()) continue;
                for (const auto& y : elements(f)) {
                    const auto formula = q_order(y, x, n);
                    const auto q = q_matrix(y, x, n);
                    EXPECT_EQ(q_order_bruteforce(y, x, n), bruteforce_result{formula});
                    EXPECT_TRUE(is_exact_order(q, formula.value()));
                }
            }
    }
}

TEST(QOrder, DimensionIndependenceAndSpecializations)
{
    std::mt19937_64 rng(8);
    const auto fields = testing_helpers::finite_test_fields();
    for (int t = 0; t < 200; ++t) {
        const auto& f = fields[rng() % fields.size()];
        const auto y = element::from_index(f, rng() % f.size());
        const auto x = element::from_index(f, 1 + rng() % (f.size() - 1));
        const auto base = q_order(y, x, 2);
        for (std::size_t n = 3; n <= 6; ++n) EXPECT_EQ(q_order(y, x, n), base);
        EXPECT_EQ(p2_order(x, 3), q_order(one(f), x, 3));
        EXPECT_EQ(p1_order(y, 3), q_order(y, one(f), 3));
    }
}

TEST(QOrder, RationalsFiniteOnlyForIdentity)
{
    const auto qq = make_rational_field();
    for (const char* ys : {"0", "1", "-1", "1/2", "2"})
        for (const char* xs : {"1", "-1", "2", "-2", "1/3", "3"}) {
            const auto y = el(qq, ys), x = el(qq, xs);
            const bool identity_matrix = q_matrix(y, x, 3).is_identity();
            EXPECT_EQ(q_order(y, x, 3).is_finite(), identity_matrix) << ys << " " << xs;
        }
}

TEST(Agreement, Semantics)
{
    EXPECT_TRUE(agrees(order_result::finite(3), bruteforce_result{order_result::finite(3)}));
    EXPECT_FALSE(agrees(order_result::finite(3), bruteforce_result{order_result::finite(6)}));
    EXPECT_TRUE(agrees(order_result::infinite(), bruteforce_result{exceeded{10}}));
    EXPECT_TRUE(agrees(order_result::finite(12), bruteforce_result{exceeded{10}}));
    EXPECT_FALSE(agrees(order_result::finite(3), bruteforce_result{exceeded{10}}));
    EXPECT_FALSE(agrees(order_result::infinite(), bruteforce_result{order_result::finite(1)}));
}

TEST(ExactOrder, RejectsMultiplesAndDivisors)
{
    const auto f7 = make_prime_field(7);
    const auto q = q_matrix(el(f7, 3), el(f7, 2), 2); // order 3
    EXPECT_TRUE(is_exact_order(q, 3));
    EXPECT_FALSE(is_exact_order(q, 6));
    EXPECT_FALSE(is_exact_order(q, 1));
    EXPECT_FALSE(is_exact_order(q, 0));
}
