#pragma once

/**
 * @file field.hpp
 * @brief Exact fields: GF(p), GF(p^k) with an explicit modulus, and the rationals.
 *
 * A zlp::field is a cheap-to-copy handle on an immutable descriptor. Elements
 * carry their parent field and a canonical representation:
 *
 * - prime kind: an integer in [0, p)
 * - extension kind: k coefficients in [0, p), ascending powers of t, reduced
 *   modulo the monic irreducible modulus
 * - rational kind: a reduced fraction with positive denominator
 *
 * Equality of elements is equality of representations. Binary operations on
 * elements of different fields throw errc::mixed_fields.
 *
 * @code{.cpp}
 * auto f9 = zlp::make_extension_field(3, 2, std::vector<std::uint64_t>{1, 0, 1});
 * auto t = zlp::parse_element(f9, "[0,1]");
 * assert(t * t == zlp::element::from_integer(f9, 2));
 * @endcode
 */

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "integer.hpp"

namespace zlp {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

enum class field_kind { prime, extension, rational };

namespace detail {

using poly = std::vector<std::uint64_t>;
using repr = std::variant<std::uint64_t, poly, rational>;

struct field_data {
    field_kind kind = field_kind::rational;
    std::uint64_t p = 0;
    unsigned k = 1;
    poly modulus;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> group_order_primes; // distinct primes dividing q - 1

    // Rows of Pascal's triangle reduced into the field, grown on demand.
    mutable std::mutex binomial_mutex;
    mutable std::vector<std::vector<repr>> binomial_rows;
};

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) noexcept
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) noexcept { return pow_mod(a, p - 2, p); }

inline void trim(poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline poly poly_mul(const poly& a, const poly& b, std::uint64_t p)
{
    if (a.empty() || b.empty()) return {};
    poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

// Remainder of a modulo a nonzero f.
inline poly poly_mod(poly a, poly f, std::uint64_t p)
{
    trim(a);
    trim(f);
    if (f.empty()) throw error(errc::division_by_zero, "polynomial division by zero");
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const std::uint64_t c = mul_mod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + p - mul_mod(c, f[i], p)) % p;
        trim(a);
    }
    return a;
}

inline poly poly_sub(poly a, const poly& b, std::uint64_t p)
{
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline poly poly_gcd(poly a, poly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline poly poly_powmod(poly base, std::uint64_t e, const poly& f, std::uint64_t p)
{
    poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

// Degree-k f is irreducible iff gcd(x^(p^i) - x, f) = 1 for 1 <= i <= k/2.
inline bool is_irreducible(const poly& f, std::uint64_t p)
{
    poly g = f;
    trim(g);
    if (g.size() < 2) return false;
    const std::size_t k = g.size() - 1;
    const poly x{0, 1};
    poly h = poly_mod(x, g, p);
    for (std::size_t i = 1; i <= k / 2; ++i) {
        h = poly_powmod(h, p, g, p);
        poly d = poly_gcd(g, poly_sub(h, x, p), p);
        if (d.size() > 1) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> distinct_primes(std::uint64_t m)
{
    auto all = factor_integer(m);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

inline std::uint64_t parse_u64(std::string_view s, const char* what)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw error(errc::parse_error, std::string("invalid ") + what + ": '" + std::string(s) + "'");
    return v;
}

inline bigint parse_bigint(std::string_view s)
{
    std::string_view digits = s;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw error(errc::parse_error, "invalid integer: '" + std::string(s) + "'");
    bigint v{std::string(digits)};
    return negative ? bigint(-v) : v;
}

// "a" or "a/b" with b != 0.
inline rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    bigint num = parse_bigint(text.substr(0, slash));
    bigint den = slash == std::string_view::npos ? bigint(1) : parse_bigint(text.substr(slash + 1));
    if (den == 0) throw error(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return rational(num, den);
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

} // namespace detail

class element;

class field {
public:
    field_kind kind() const noexcept { return data_->kind; }
    /// p for finite fields, 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return data_->p; }
    unsigned degree() const noexcept { return data_->k; }
    /// Ascending coefficients of the monic modulus; empty unless extension kind.
    const std::vector<std::uint64_t>& modulus() const noexcept { return data_->modulus; }
    /// Number of elements, 0 for the rationals.
    std::uint64_t size() const noexcept { return data_->q; }
    bool is_finite() const noexcept { return data_->kind != field_kind::rational; }

    /// Canonical spec string; extension fields always spell out the modulus.
    std::string spec() const
    {
        switch (kind()) {
        case field_kind::prime: return "gf:" + std::to_string(data_->p);
        case field_kind::extension: {
            std::string s = "gf:" + std::to_string(data_->p) + "^" + std::to_string(data_->k) + ":m=";
            for (std::size_t i = 0; i < data_->modulus.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(data_->modulus[i]);
            }
            return s;
        }
        case field_kind::rational: return "qq";
        }
        return {};
    }

    friend bool operator==(const field& a, const field& b) noexcept
    {
        if (a.data_ == b.data_) return true;
        return a.data_->kind == b.data_->kind && a.data_->p == b.data_->p && a.data_->k == b.data_->k &&
               a.data_->modulus == b.data_->modulus;
    }

    // Internal descriptor, used by the binomial cache and element arithmetic.
    const detail::field_data& data() const noexcept { return *data_; }

private:
    explicit field(std::shared_ptr<const detail::field_data> d) : data_(std::move(d)) {}

    std::shared_ptr<const detail::field_data> data_;

    friend field make_prime_field(std::uint64_t);
    friend field make_extension_field(std::uint64_t, unsigned, std::optional<std::vector<std::uint64_t>>);
    friend field make_rational_field();
};

inline field make_prime_field(std::uint64_t p)
{
    if (!is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
    if (p > max_field_size) throw error(errc::too_large, "field size exceeds 2^40");
    auto d = std::make_shared<detail::field_data>();
    d->kind = field_kind::prime;
    d->p = p;
    d->k = 1;
    d->q = p;
    d->group_order_primes = detail::distinct_primes(p - 1);
    return field(std::move(d));
}

/// GF(p^k). Without a modulus, the smallest monic irreducible of degree k is
/// used, comparing coefficient vectors from the t^(k-1) term downwards.
inline field make_extension_field(std::uint64_t p, unsigned k,
                                  std::optional<std::vector<std::uint64_t>> modulus = std::nullopt)
{
    if (!is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
    if (k < 2) throw error(errc::invalid_argument, "extension degree must be >= 2");
    const std::uint64_t q = saturating_pow(p, k);
    if (q > max_field_size) throw error(errc::too_large, "field size exceeds 2^40");

    auto d = std::make_shared<detail::field_data>();
    d->kind = field_kind::extension;
    d->p = p;
    d->k = k;
    d->q = q;
    if (modulus) {
        const auto& m = *modulus;
        if (m.size() != k + 1 || m.back() != 1)
            throw error(errc::invalid_argument, "modulus must be monic of degree " + std::to_string(k));
        if (std::any_of(m.begin(), m.end(), [p](std::uint64_t c) { return c >= p; }))
            throw error(errc::invalid_argument, "modulus coefficients must lie in [0, p)");
        if (!detail::is_irreducible(m, p)) throw error(errc::reducible, "modulus is reducible over GF(p)");
        d->modulus = m;
    } else {
        // Index i encodes c_0 + c_1 p + ... with c_(k-1) most significant.
        const std::uint64_t count = q;
        for (std::uint64_t i = 0; i < count; ++i) {
            detail::poly m(k + 1, 0);
            std::uint64_t v = i;
            for (unsigned j = 0; j < k; ++j) {
                m[j] = v % p;
                v /= p;
            }
            m[k] = 1;
            if (m[0] != 0 && detail::is_irreducible(m, p)) {
                d->modulus = std::move(m);
                break;
            }
        }
    }
    d->group_order_primes = detail::distinct_primes(q - 1);
    return field(std::move(d));
}

inline field make_rational_field()
{
    static const std::shared_ptr<const detail::field_data> instance = [] {
        auto d = std::make_shared<detail::field_data>();
        d->kind = field_kind::rational;
        return d;
    }();
    return field(instance);
}

/// Parses "gf:p", "gf:p^k", "gf:p^k:m=c0,...,ck" or "qq".
inline field parse_field(std::string_view spec)
{
    if (spec == "qq") return make_rational_field();
    if (spec.substr(0, 3) != "gf:") throw error(errc::parse_error, "unknown field spec '" + std::string(spec) + "'");
    std::string_view rest = spec.substr(3);
    std::optional<std::vector<std::uint64_t>> modulus;
    if (auto colon = rest.find(':'); colon != std::string_view::npos) {
        std::string_view mod = rest.substr(colon + 1);
        rest = rest.substr(0, colon);
        if (mod.substr(0, 2) != "m=") throw error(errc::parse_error, "expected 'm=' in '" + std::string(spec) + "'");
        std::vector<std::uint64_t> coeffs;
        for (auto c : detail::split(mod.substr(2), ',')) coeffs.push_back(detail::parse_u64(c, "modulus coefficient"));
        modulus = std::move(coeffs);
    }
    auto caret = rest.find('^');
    const std::uint64_t p = detail::parse_u64(rest.substr(0, caret), "characteristic");
    if (caret == std::string_view::npos) {
        if (modulus) throw error(errc::parse_error, "a modulus requires an extension degree");
        return make_prime_field(p);
    }
    const std::uint64_t k = detail::parse_u64(rest.substr(caret + 1), "extension degree");
    if (k == 0 || k > 64) throw error(errc::parse_error, "extension degree out of range");
    if (k == 1 && !modulus) return make_prime_field(p);
    return make_extension_field(p, static_cast<unsigned>(k), std::move(modulus));
}

class element {
public:
    const field& parent() const noexcept { return parent_; }

    static element zero(const field& f)
    {
        switch (f.kind()) {
        case field_kind::prime: return element(f, std::uint64_t{0});
        case field_kind::extension: return element(f, detail::poly(f.degree(), 0));
        case field_kind::rational: return element(f, rational(0));
        }
        return element(f, rational(0));
    }

    static element one(const field& f) { return from_integer(f, 1); }

    /// Image of the integer v in f.
    static element from_integer(const field& f, std::int64_t v)
    {
        if (f.kind() == field_kind::rational) return element(f, rational(v));
        const std::uint64_t p = f.characteristic();
        const auto mag = static_cast<std::uint64_t>(v < 0 ? -(v + 1) : v) + (v < 0 ? 1 : 0);
        std::uint64_t r = mag % p;
        if (v < 0 && r != 0) r = p - r;
        if (f.kind() == field_kind::prime) return element(f, r);
        detail::poly c(f.degree(), 0);
        c[0] = r;
        return element(f, std::move(c));
    }

    static element from_rational(const field& f, const rational& v)
    {
        if (f.kind() != field_kind::rational) {
            const std::uint64_t p = f.characteristic();
            auto reduce = [p](const bigint& b) {
                bigint r = b % p;
                if (r < 0) r += p;
                return r.convert_to<std::uint64_t>();
            };
            const std::uint64_t den = reduce(boost::multiprecision::denominator(v));
            if (den == 0) throw error(errc::division_by_zero, "denominator vanishes in characteristic " + std::to_string(p));
            const std::uint64_t num = mul_mod(reduce(boost::multiprecision::numerator(v)), detail::inv_mod(den, p), p);
            if (f.kind() == field_kind::prime) return element(f, num);
            detail::poly c(f.degree(), 0);
            c[0] = num;
            return element(f, std::move(c));
        }
        return element(f, v);
    }

    /// Extension element from ascending coefficients (each reduced mod p, padded to k).
    static element from_coefficients(const field& f, std::vector<std::uint64_t> coeffs)
    {
        if (f.kind() == field_kind::rational) throw error(errc::invalid_argument, "coefficients need a finite field");
        const std::uint64_t p = f.characteristic();
        for (auto& c : coeffs) c %= p;
        if (f.kind() == field_kind::prime) {
            detail::trim(coeffs);
            if (coeffs.size() > 1) throw error(errc::invalid_argument, "prime field elements have one coefficient");
            return element(f, coeffs.empty() ? std::uint64_t{0} : coeffs[0]);
        }
        if (coeffs.size() > f.degree()) coeffs = detail::poly_mod(std::move(coeffs), f.modulus(), p);
        coeffs.resize(f.degree(), 0);
        return element(f, std::move(coeffs));
    }

    /// The index-th element of a finite field: base-p digits give the coefficients.
    static element from_index(const field& f, std::uint64_t index)
    {
        if (!f.is_finite() || index >= f.size()) throw error(errc::invalid_argument, "element index out of range");
        if (f.kind() == field_kind::prime) return element(f, index);
        detail::poly c(f.degree(), 0);
        for (auto& x : c) {
            x = index % f.characteristic();
            index /= f.characteristic();
        }
        return element(f, std::move(c));
    }

    /// Inverse of from_index; finite fields only.
    std::uint64_t index() const
    {
        if (auto v = std::get_if<std::uint64_t>(&value_)) return *v;
        if (auto c = std::get_if<detail::poly>(&value_)) {
            std::uint64_t idx = 0;
            for (auto it = c->rbegin(); it != c->rend(); ++it) idx = idx * parent_.characteristic() + *it;
            return idx;
        }
        throw error(errc::invalid_argument, "rational elements have no index");
    }

    bool is_zero() const
    {
        if (auto v = std::get_if<std::uint64_t>(&value_)) return *v == 0;
        if (auto c = std::get_if<detail::poly>(&value_))
            return std::all_of(c->begin(), c->end(), [](std::uint64_t x) { return x == 0; });
        return std::get<rational>(value_) == 0;
    }

    bool is_one() const { return *this == one(parent_); }

    const detail::repr& value() const noexcept { return value_; }

    // Unchecked: r must already be canonical for f.
    static element from_repr(const field& f, detail::repr r) { return element(f, std::move(r)); }

    /// Canonical text: decimal, "[c0,...,c(k-1)]", or "a/b" / "a".
    std::string to_string() const
    {
        if (auto v = std::get_if<std::uint64_t>(&value_)) return std::to_string(*v);
        if (auto c = std::get_if<detail::poly>(&value_)) {
            std::string s = "[";
            for (std::size_t i = 0; i < c->size(); ++i) {
                if (i) s += ',';
                s += std::to_string((*c)[i]);
            }
            return s + "]";
        }
        const auto& r = std::get<rational>(value_);
        std::string s = boost::multiprecision::numerator(r).str();
        if (boost::multiprecision::denominator(r) != 1) s += "/" + boost::multiprecision::denominator(r).str();
        return s;
    }

    friend bool operator==(const element& a, const element& b) { return a.parent_ == b.parent_ && a.value_ == b.value_; }

    friend element operator+(const element& a, const element& b)
    {
        check_same(a, b);
        const std::uint64_t p = a.parent_.characteristic();
        if (auto x = std::get_if<std::uint64_t>(&a.value_)) return element(a.parent_, (*x + std::get<std::uint64_t>(b.value_)) % p);
        if (auto x = std::get_if<detail::poly>(&a.value_)) {
            const auto& y = std::get<detail::poly>(b.value_);
            detail::poly r(x->size());
            for (std::size_t i = 0; i < r.size(); ++i) r[i] = ((*x)[i] + y[i]) % p;
            return element(a.parent_, std::move(r));
        }
        return element(a.parent_, rational(std::get<rational>(a.value_) + std::get<rational>(b.value_)));
    }

    friend element operator-(const element& a)
    {
        const std::uint64_t p = a.parent_.characteristic();
        if (auto x = std::get_if<std::uint64_t>(&a.value_)) return element(a.parent_, (p - *x) % p);
        if (auto x = std::get_if<detail::poly>(&a.value_)) {
            detail::poly r(x->size());
            for (std::size_t i = 0; i < r.size(); ++i) r[i] = (p - (*x)[i]) % p;
            return element(a.parent_, std::move(r));
        }
        return element(a.parent_, rational(-std::get<rational>(a.value_)));
    }

    friend element operator-(const element& a, const element& b) { return a + (-b); }

    friend element operator*(const element& a, const element& b)
    {
        check_same(a, b);
        const std::uint64_t p = a.parent_.characteristic();
        if (auto x = std::get_if<std::uint64_t>(&a.value_)) return element(a.parent_, mul_mod(*x, std::get<std::uint64_t>(b.value_), p));
        if (auto x = std::get_if<detail::poly>(&a.value_)) {
            auto r = detail::poly_mod(detail::poly_mul(*x, std::get<detail::poly>(b.value_), p), a.parent_.modulus(), p);
            r.resize(a.parent_.degree(), 0);
            return element(a.parent_, std::move(r));
        }
        return element(a.parent_, rational(std::get<rational>(a.value_) * std::get<rational>(b.value_)));
    }

    friend element inv(const element& a);
    friend element pow(const element& a, std::int64_t e);

    friend element operator/(const element& a, const element& b) { return a * inv(b); }

    element& operator+=(const element& b) { return *this = *this + b; }
    element& operator-=(const element& b) { return *this = *this - b; }
    element& operator*=(const element& b) { return *this = *this * b; }

private:
    element(field f, detail::repr v) : parent_(std::move(f)), value_(std::move(v)) {}

    static void check_same(const element& a, const element& b)
    {
        if (!(a.parent_ == b.parent_))
            throw error(errc::mixed_fields, "operands belong to " + a.parent_.spec() + " and " + b.parent_.spec());
    }

    field parent_;
    detail::repr value_;

    friend element parse_element(const field&, std::string_view);
};

inline element zero(const field& f) { return element::zero(f); }
inline element one(const field& f) { return element::one(f); }

/// pow(a, 0) is one for every a, including zero.
inline element pow(const element& a, std::int64_t e)
{
    if (e < 0) return pow(inv(a), -(e + 1)) * inv(a);
    element result = element::one(a.parent_);
    element base = a;
    auto n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

inline element inv(const element& a)
{
    if (a.is_zero()) throw error(errc::division_by_zero, "inverse of zero");
    switch (a.parent_.kind()) {
    case field_kind::prime: {
        const std::uint64_t p = a.parent_.characteristic();
        return element(a.parent_, detail::inv_mod(std::get<std::uint64_t>(a.value_), p));
    }
    case field_kind::extension:
        return pow(a, static_cast<std::int64_t>(a.parent_.size() - 2));
    case field_kind::rational:
        return element(a.parent_, rational(1 / std::get<rational>(a.value_)));
    }
    return a;
}

inline element neg(const element& a) { return -a; }

/// Parses an element text form. Every field accepts "a" or "a/b" (reduced
/// into the prime subfield for finite fields); extension fields also accept
/// "[c0,c1,...]".
inline element parse_element(const field& f, std::string_view text)
{
    if (text.empty()) throw error(errc::parse_error, "empty element text");
    switch (f.kind()) {
    case field_kind::prime:
    case field_kind::extension: {
        if (text.front() == '[') {
            if (f.kind() == field_kind::prime || text.back() != ']')
                throw error(errc::parse_error, "invalid element '" + std::string(text) + "' for " + f.spec());
            std::vector<std::uint64_t> coeffs;
            for (auto c : detail::split(text.substr(1, text.size() - 2), ','))
                coeffs.push_back(detail::parse_u64(c, "coefficient"));
            if (coeffs.size() > f.degree())
                throw error(errc::parse_error, "too many coefficients in '" + std::string(text) + "'");
            return element::from_coefficients(f, std::move(coeffs));
        }
        return element::from_rational(f, detail::parse_rational(text));
    }
    case field_kind::rational: return element(f, detail::parse_rational(text));
    }
    throw error(errc::parse_error, "unreachable");
}

/// All elements of a finite field in index order.
inline std::vector<element> elements(const field& f)
{
    if (!f.is_finite()) throw error(errc::invalid_argument, "cannot enumerate an infinite field");
    std::vector<element> out;
    out.reserve(f.size());
    for (std::uint64_t i = 0; i < f.size(); ++i) out.push_back(element::from_index(f, i));
    return out;
}

/// Multiplicative order of a group element: a positive integer or infinite.
class order_result {
public:
    static order_result finite(std::uint64_t m)
    {
        if (m == 0) throw error(errc::invalid_argument, "finite order must be >= 1");
        return order_result(m);
    }
    static order_result infinite() { return order_result(0); }

    bool is_finite() const noexcept { return m_ != 0; }
    std::uint64_t value() const
    {
        if (!is_finite()) throw error(errc::invalid_argument, "order is infinite");
        return m_;
    }

    std::string to_string() const { return is_finite() ? std::to_string(m_) : "infinite"; }

    friend bool operator==(const order_result&, const order_result&) = default;

private:
    explicit order_result(std::uint64_t m) : m_(m) {}
    std::uint64_t m_; // 0 encodes infinite
};

/// Least m >= 1 with a^m = 1. Finite fields descend from q - 1 through its
/// prime divisors; over the rationals only 1 and -1 have finite order.
inline order_result multiplicative_order(const element& a)
{
    if (a.is_zero()) throw error(errc::zero_element, "zero has no multiplicative order");
    const field& f = a.parent();
    if (!f.is_finite()) {
        if (a.is_one()) return order_result::finite(1);
        if ((-a).is_one()) return order_result::finite(2);
        return order_result::infinite();
    }
    std::uint64_t m = f.size() - 1;
    for (std::uint64_t l : f.data().group_order_primes) {
        while (m % l == 0 && pow(a, static_cast<std::int64_t>(m / l)).is_one()) m /= l;
    }
    return order_result::finite(m);
}

} // namespace zlp
