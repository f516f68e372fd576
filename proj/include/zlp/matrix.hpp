#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace zlp {

/// Dense n x n matrix over a zlp::field, row-major, immutable once built.
class square_matrix {
public:
    /// Zero matrix.
    square_matrix(field f, std::size_t n) : field_(std::move(f)), n_(n)
    {
        check_dimension(n_);
        entries_.assign(n_ * n_, zero(field_));
    }

    /// Builds entry (i, j), 0-based, from gen(i, j).
    template <class Gen>
        requires std::is_invocable_r_v<element, Gen, std::size_t, std::size_t>
    square_matrix(field f, std::size_t n, Gen&& gen) : field_(std::move(f)), n_(n)
    {
        check_dimension(n_);
        entries_.reserve(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) entries_.push_back(checked(gen(i, j)));
    }

    /// From row-major entries; entries.size() must be a positive perfect square.
    square_matrix(field f, std::vector<element> entries) : field_(std::move(f)), entries_(std::move(entries))
    {
        while (n_ * n_ < entries_.size()) ++n_;
        if (n_ * n_ != entries_.size()) throw error(errc::dimension_mismatch, "entry count is not a perfect square");
        check_dimension(n_);
        for (const auto& e : entries_) checked(e);
    }

    static square_matrix identity(const field& f, std::size_t n)
    {
        return square_matrix(f, n, [&](std::size_t i, std::size_t j) { return i == j ? one(f) : zero(f); });
    }

    const field& parent() const noexcept { return field_; }
    std::size_t size() const noexcept { return n_; }
    const element& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::span<const element> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
    std::span<const element> entries() const noexcept { return entries_; }

    std::vector<element> column(std::size_t j) const
    {
        std::vector<element> c;
        c.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    bool is_upper_triangular() const
    {
        for (std::size_t i = 1; i < n_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (!(*this)(i, j).is_zero()) return false;
        return true;
    }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                const auto& e = (*this)(i, j);
                if (i == j ? !e.is_one() : !e.is_zero()) return false;
            }
        return true;
    }

    friend bool operator==(const square_matrix& a, const square_matrix& b)
    {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    friend square_matrix operator*(const square_matrix& a, const square_matrix& b)
    {
        check_compatible(a, b);
        const std::size_t n = a.n_;
        std::vector<element> out;
        out.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                element s = zero(a.field_);
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& x = a(i, k);
                    if (x.is_zero()) continue;
                    s += x * b(k, j);
                }
                out.push_back(std::move(s));
            }
        return square_matrix(a.field_, n, std::move(out), raw_tag{});
    }

    friend square_matrix operator+(const square_matrix& a, const square_matrix& b)
    {
        check_compatible(a, b);
        std::vector<element> out;
        out.reserve(a.entries_.size());
        for (std::size_t i = 0; i < a.entries_.size(); ++i) out.push_back(a.entries_[i] + b.entries_[i]);
        return square_matrix(a.field_, a.n_, std::move(out), raw_tag{});
    }

    friend square_matrix operator-(const square_matrix& a, const square_matrix& b)
    {
        check_compatible(a, b);
        std::vector<element> out;
        out.reserve(a.entries_.size());
        for (std::size_t i = 0; i < a.entries_.size(); ++i) out.push_back(a.entries_[i] - b.entries_[i]);
        return square_matrix(a.field_, a.n_, std::move(out), raw_tag{});
    }

    friend square_matrix operator*(const element& c, const square_matrix& a)
    {
        std::vector<element> out;
        out.reserve(a.entries_.size());
        for (const auto& e : a.entries_) out.push_back(c * e);
        return square_matrix(a.field_, a.n_, std::move(out), raw_tag{});
    }

    /// Matrix-vector product.
    friend std::vector<element> operator*(const square_matrix& a, std::span<const element> v)
    {
        if (v.size() != a.n_) throw error(errc::dimension_mismatch, "vector length differs from matrix dimension");
        std::vector<element> out;
        out.reserve(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) {
            element s = zero(a.field_);
            for (std::size_t k = 0; k < a.n_; ++k) s += a(i, k) * v[k];
            out.push_back(std::move(s));
        }
        return out;
    }

private:
    struct raw_tag {};
    square_matrix(field f, std::size_t n, std::vector<element> entries, raw_tag)
        : field_(std::move(f)), n_(n), entries_(std::move(entries))
    {
    }

    static void check_dimension(std::size_t n)
    {
        if (n == 0) throw error(errc::dimension_too_small, "matrix dimension must be >= 1");
    }

    const element& checked(const element& e) const
    {
        if (!(e.parent() == field_)) throw error(errc::mixed_fields, "entry does not belong to " + field_.spec());
        return e;
    }

    static void check_compatible(const square_matrix& a, const square_matrix& b)
    {
        if (!(a.field_ == b.field_)) throw error(errc::mixed_fields, "matrices over different fields");
        if (a.n_ != b.n_) throw error(errc::dimension_mismatch, "matrices of different dimensions");
    }

    field field_;
    std::size_t n_ = 0;
    std::vector<element> entries_;
};

inline square_matrix identity(const field& f, std::size_t n) { return square_matrix::identity(f, n); }

/// pow(a, 0) is the identity.
inline square_matrix pow(const square_matrix& a, std::uint64_t e)
{
    square_matrix result = identity(a.parent(), a.size());
    square_matrix base = a;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

/// Rank by Gauss-Jordan elimination over the parent field.
inline std::size_t rank(const square_matrix& a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<element>> m;
    m.reserve(n);
    for (std::size_t i = 0; i < n; ++i) m.emplace_back(a.row(i).begin(), a.row(i).end());

    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t pivot = r;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) continue;
        std::swap(m[r], m[pivot]);
        const element pinv = inv(m[r][col]);
        for (std::size_t j = col; j < n; ++j) m[r][j] *= pinv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            const element factor = m[i][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Factorization, order, diagonalizability and census need n >= 2.
inline void require_min_dimension(std::size_t n)
{
    if (n < 2) throw error(errc::dimension_too_small, "n must be >= 2, got " + std::to_string(n));
}

} // namespace zlp
