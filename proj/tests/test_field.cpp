#include <random>

#include <gtest/gtest.h>

#include <zlp/field.hpp>
#include <zlp/integer.hpp>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace zlp;
using testing_helpers::el;

namespace {

template <class F>
errc error_code(F&& f)
{
    try {
        f();
    } catch (const zlp::error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no zlp::error thrown";
    return errc::invalid_argument;
}

} // namespace

TEST(PrimeField, Construction)
{
    const auto f5 = make_prime_field(5);
    EXPECT_EQ(f5.kind(), field_kind::prime);
    EXPECT_EQ(f5.characteristic(), 5u);
    EXPECT_EQ(f5.size(), 5u);
    EXPECT_EQ(make_prime_field(2).characteristic(), 2u);
    EXPECT_EQ(error_code([] { make_prime_field(6); }), errc::not_prime);
    EXPECT_EQ(error_code([] { make_prime_field(1); }), errc::not_prime);
    EXPECT_EQ(error_code([] { make_prime_field(1099511627791ull); }), errc::too_large); // prime > 2^40
}

TEST(ExtensionField, ExplicitModulus)
{
    const auto f9 = make_extension_field(3, 2, std::vector<std::uint64_t>{1, 0, 1});
    EXPECT_EQ(f9.kind(), field_kind::extension);
    EXPECT_EQ(f9.size(), 9u);
    EXPECT_EQ(f9.modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
    EXPECT_EQ(error_code([] { make_extension_field(3, 2, std::vector<std::uint64_t>{0, 0, 1}); }), errc::reducible);
    // t^2 + 2 = (t+1)(t+2) over GF(3)
    EXPECT_EQ(error_code([] { make_extension_field(3, 2, std::vector<std::uint64_t>{2, 0, 1}); }), errc::reducible);
    EXPECT_EQ(error_code([] { make_extension_field(3, 2, std::vector<std::uint64_t>{1, 0, 2}); }), errc::invalid_argument);
    EXPECT_EQ(error_code([] { make_extension_field(4, 2); }), errc::not_prime);
}

TEST(ExtensionField, AutoModulusIsSmallestIrreducible)
{
    EXPECT_EQ(make_extension_field(2, 2).modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
    EXPECT_EQ(make_extension_field(2, 3).modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
    EXPECT_EQ(make_extension_field(3, 2).modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
    // 49 = 7^2: t^2 + 1 is reducible mod 7? No root since -1 is a non-residue mod 7.
    EXPECT_EQ(make_extension_field(7, 2).modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
    EXPECT_EQ(make_extension_field(5, 2).modulus(), (std::vector<std::uint64_t>{2, 0, 1}));
}

TEST(ExtensionField, IrreducibilityMatchesRootSearchForQuadratics)
{
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        for (std::uint64_t c0 = 0; c0 < p; ++c0)
            for (std::uint64_t c1 = 0; c1 < p; ++c1) {
                bool has_root = false;
                for (std::uint64_t t = 0; t < p; ++t) has_root = has_root || (c0 + c1 * t + t * t) % p == 0;
                EXPECT_EQ(detail::is_irreducible({c0, c1, 1}, p), !has_root) << p << " " << c0 << " " << c1;
            }
    }
}

TEST(RationalField, Singleton)
{
    const auto q1 = make_rational_field();
    const auto q2 = make_rational_field();
    EXPECT_EQ(q1.kind(), field_kind::rational);
    EXPECT_EQ(q1.characteristic(), 0u);
    EXPECT_TRUE(q1 == q2);
    EXPECT_FALSE(q1.is_finite());
}

TEST(FieldSpec, Grammar)
{
    EXPECT_TRUE(parse_field("gf:5") == make_prime_field(5));
    EXPECT_TRUE(parse_field("gf:2^2") == make_extension_field(2, 2));
    EXPECT_TRUE(parse_field("gf:3^2:m=1,0,1") == make_extension_field(3, 2, std::vector<std::uint64_t>{1, 0, 1}));
    EXPECT_TRUE(parse_field("qq") == make_rational_field());
    EXPECT_EQ(parse_field("gf:3^2:m=2,2,1").spec(), "gf:3^2:m=2,2,1");
    EXPECT_EQ(make_extension_field(2, 3).spec(), "gf:2^3:m=1,1,0,1");
    EXPECT_FALSE(parse_field("gf:3^2:m=2,2,1") == parse_field("gf:3^2"));
    EXPECT_EQ(error_code([] { parse_field("gf:"); }), errc::parse_error);
    EXPECT_EQ(error_code([] { parse_field("gf:5x"); }), errc::parse_error);
    EXPECT_EQ(error_code([] { parse_field("rr"); }), errc::parse_error);
    EXPECT_EQ(error_code([] { parse_field("gf:6"); }), errc::not_prime);
    EXPECT_EQ(error_code([] { parse_field("gf:3^2:m=0,0,1"); }), errc::reducible);
}

TEST(Arithmetic, SpecExamples)
{
    const auto f5 = make_prime_field(5);
    EXPECT_EQ(inv(el(f5, 3)), el(f5, 2));
    const auto f9 = parse_field("gf:3^2:m=1,0,1");
    const auto t = el(f9, "[0,1]");
    EXPECT_EQ(t * t, el(f9, 2));
    const auto qq = make_rational_field();
    EXPECT_EQ(pow(zero(qq), 0), one(qq));
    EXPECT_EQ(pow(zero(f5), 0), one(f5));
    EXPECT_EQ(pow(zero(f9), 0), one(f9));
}

TEST(Arithmetic, Errors)
{
    const auto f5 = make_prime_field(5);
    const auto f7 = make_prime_field(7);
    EXPECT_EQ(error_code([&] { (void)(el(f5, 1) + el(f7, 1)); }), errc::mixed_fields);
    EXPECT_EQ(error_code([&] { (void)(el(f5, 1) * el(f7, 1)); }), errc::mixed_fields);
    EXPECT_EQ(error_code([&] { (void)inv(zero(f5)); }), errc::division_by_zero);
    EXPECT_EQ(error_code([&] { (void)pow(zero(f5), -1); }), errc::division_by_zero);
    EXPECT_EQ(error_code([&] { (void)inv(zero(make_rational_field())); }), errc::division_by_zero);
}

TEST(Arithmetic, RationalsStayReduced)
{
    const auto qq = make_rational_field();
    const auto a = el(qq, "2/4");
    EXPECT_EQ(a.to_string(), "1/2");
    EXPECT_EQ(el(qq, "6/-3").to_string(), "-2");
    EXPECT_EQ((a + a).to_string(), "1");
    EXPECT_EQ(pow(a, -3).to_string(), "8");
    // No overflow: (1/3)^100 has a 48-digit denominator.
    EXPECT_EQ(pow(el(qq, "1/3"), 100).to_string().size(), 2 + 48u);
}

TEST(Arithmetic, InverseAndPowerLaws)
{
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::int64_t> ex(-10, 10);
    for (const auto& f : testing_helpers::finite_test_fields()) {
        for (const auto& a : elements(f)) {
            if (a.is_zero()) continue;
            EXPECT_EQ(inv(a) * a, one(f)) << f.spec() << " " << a.to_string();
            for (int t = 0; t < 5; ++t) {
                const auto e1 = ex(rng), e2 = ex(rng);
                EXPECT_EQ(pow(a, e1 + e2), pow(a, e1) * pow(a, e2));
            }
        }
    }
}

TEST(Arithmetic, ExtensionMultiplicationMatchesConvolution)
{
    std::mt19937_64 rng(2);
    for (const char* spec : {"gf:2^3", "gf:3^2", "gf:3^2:m=2,2,1", "gf:5^3", "gf:2^5"}) {
        const auto f = parse_field(spec);
        const std::vector<std::int64_t> modulus(f.modulus().begin(), f.modulus().end());
        std::uniform_int_distribution<std::uint64_t> pick(0, f.size() - 1);
        for (int t = 0; t < 200; ++t) {
            const auto a = element::from_index(f, pick(rng));
            const auto b = element::from_index(f, pick(rng));
            const auto& av = std::get<detail::poly>(a.value());
            const auto& bv = std::get<detail::poly>(b.value());
            const auto expect = oracle::ext_mul({av.begin(), av.end()}, {bv.begin(), bv.end()}, modulus,
                                                static_cast<std::int64_t>(f.characteristic()));
            const auto product = a * b;
            const auto& got = std::get<detail::poly>(product.value());
            EXPECT_EQ(std::vector<std::int64_t>(got.begin(), got.end()), expect) << spec;
        }
    }
}

TEST(Elements, TextRoundTrip)
{
    auto fields = testing_helpers::finite_test_fields();
    for (const auto& f : fields)
        for (const auto& a : elements(f)) {
            EXPECT_EQ(parse_element(f, a.to_string()), a);
            EXPECT_EQ(element::from_index(f, a.index()), a);
        }
    const auto qq = make_rational_field();
    for (const char* s : {"0", "-7", "22/7", "-1/1000000000000000000000"})
        EXPECT_EQ(parse_element(qq, parse_element(qq, s).to_string()), parse_element(qq, s));
}

TEST(Elements, ParsingForms)
{
    const auto f5 = make_prime_field(5);
    EXPECT_EQ(el(f5, "-1"), el(f5, 4));
    EXPECT_EQ(el(f5, "12"), el(f5, 2));
    EXPECT_EQ(el(f5, "1/2"), el(f5, 3));
    const auto f4 = make_extension_field(2, 2);
    EXPECT_EQ(el(f4, "1").to_string(), "[1,0]");
    EXPECT_EQ(el(f4, "[1]").to_string(), "[1,0]");
    EXPECT_EQ(error_code([&] { el(f4, "[1,0,1]"); }), errc::parse_error);
    EXPECT_EQ(error_code([&] { el(f5, "[1]"); }), errc::parse_error);
    EXPECT_EQ(error_code([&] { el(f5, "x"); }), errc::parse_error);
    EXPECT_EQ(error_code([&] { el(make_rational_field(), "1/0"); }), errc::parse_error);
}

TEST(FactorInteger, Examples)
{
    EXPECT_TRUE(factor_integer(1).empty());
    EXPECT_EQ(factor_integer(12), (std::vector<std::uint64_t>{2, 2, 3}));
    EXPECT_EQ(factor_integer(48), (std::vector<std::uint64_t>{2, 2, 2, 2, 3}));
    EXPECT_EQ(factor_integer(1099511627775ull), (std::vector<std::uint64_t>{3, 5, 5, 11, 17, 31, 41, 61681}));
}

TEST(FactorInteger, ProductReconstructs)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1u << 30);
    for (int t = 0; t < 200; ++t) {
        const auto m = pick(rng);
        std::uint64_t prod = 1;
        for (auto q : factor_integer(m)) {
            EXPECT_TRUE(is_prime(q));
            prod *= q;
        }
        EXPECT_EQ(prod, m);
    }
}

TEST(MultiplicativeOrder, Examples)
{
    const auto f5 = make_prime_field(5);
    const auto f7 = make_prime_field(7);
    const auto qq = make_rational_field();
    EXPECT_EQ(multiplicative_order(el(f5, 4)), order_result::finite(2));
    EXPECT_EQ(multiplicative_order(el(f7, 4)), order_result::finite(3));
    EXPECT_EQ(multiplicative_order(el(qq, 4)), order_result::infinite());
    EXPECT_EQ(multiplicative_order(el(qq, 1)), order_result::finite(1));
    EXPECT_EQ(multiplicative_order(el(qq, -1)), order_result::finite(2));
    EXPECT_EQ(multiplicative_order(el(qq, "1/2")), order_result::infinite());
    EXPECT_EQ(error_code([&] { multiplicative_order(zero(f5)); }), errc::zero_element);
}

TEST(MultiplicativeOrder, MatchesRepeatedMultiplication)
{
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 97}) {
        const auto f = make_prime_field(static_cast<std::uint64_t>(p));
        for (std::int64_t a = 1; a < p; ++a)
            EXPECT_EQ(multiplicative_order(el(f, a)).value(), oracle::element_order(a, p)) << a << " mod " << p;
    }
}

TEST(MultiplicativeOrder, LatticeProperties)
{
    for (const auto& f : testing_helpers::finite_test_fields()) {
        for (const auto& a : elements(f)) {
            if (a.is_zero()) continue;
            const auto m = multiplicative_order(a).value();
            EXPECT_EQ((f.size() - 1) % m, 0u);
            EXPECT_TRUE(pow(a, static_cast<std::int64_t>(m)).is_one());
            for (auto l : factor_integer(m)) EXPECT_FALSE(pow(a, static_cast<std::int64_t>(m / l)).is_one());
        }
    }
    // GF(49): q - 1 = 48; a generator must have order 48.
    const auto f49 = make_extension_field(7, 2);
    std::uint64_t best = 0;
    for (const auto& a : elements(f49))
        if (!a.is_zero()) best = std::max(best, multiplicative_order(a).value());
    EXPECT_EQ(best, 48u);
}

TEST(OrderResult, Invariants)
{
    EXPECT_THROW(order_result::finite(0), zlp::error);
    EXPECT_THROW(order_result::infinite().value(), zlp::error);
    EXPECT_EQ(order_result::infinite().to_string(), "infinite");
    EXPECT_EQ(order_result::finite(12).to_string(), "12");
}
