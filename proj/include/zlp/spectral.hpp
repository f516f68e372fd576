#pragma once

/**
 * @file spectral.hpp
 * @brief Eigen-decomposition of Zhang-Liu matrices and the diagonalizability test.
 *
 * When x^2 != 1, Q(y, x) = P1(z) D(x^2) P1(-z) with z = yx / (x^2 - 1), and
 * P1(-z) is the inverse of P1(z). The columns of P1(z) are therefore
 * eigenvectors, with eigenvalue (x^2)^j on column j (0-based).
 *
 * Q(y, x) is diagonalizable exactly when x^2 != 1 or y = 0. The test
 * x^2 != 1 stands for "x not in {1, -1}" and stays correct in characteristic 2.
 * diagonalizable_oracle() re-derives the answer from ranks, without the
 * criterion.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "pascal.hpp"

namespace zlp {

/// Witness of Q(source_y, source_x) = left * middle * right.
struct decomposition {
    element z;
    square_matrix left;   // P1(z)
    square_matrix middle; // D(x^2)
    square_matrix right;  // P1(-z)
    element source_y;
    element source_x;
    std::size_t n;
};

struct eigenpair {
    element value;
    std::vector<element> vector;
};

/// z = yx / (x^2 - 1).
inline element z_parameter(const element& y, const element& x)
{
    detail::require_nonzero_x(x);
    const element denom = x * x - one(x.parent());
    if (denom.is_zero()) throw error(errc::singular_parameter, "x^2 = 1: z = yx/(x^2-1) is undefined");
    return y * x / denom;
}

inline decomposition factorize_q(const element& y, const element& x, std::size_t n)
{
    require_min_dimension(n);
    element z = z_parameter(y, x);
    square_matrix left = p1_matrix(z, n);
    square_matrix middle = d_matrix(x * x, n);
    square_matrix right = p1_matrix(-z, n);
    return decomposition{std::move(z), std::move(left), std::move(middle), std::move(right), y, x, n};
}

/// Recomputes both products. A false result means the witness is wrong.
inline bool verify_factorization(const decomposition& d)
{
    const square_matrix q = q_matrix(d.source_y, d.source_x, d.n);
    if (!(d.left * d.middle * d.right == q)) return false;
    return (d.left * d.right).is_identity();
}

/// The n eigenpairs ((x^2)^j, column j of P1(z)).
inline std::vector<eigenpair> eigenpairs(const element& y, const element& x, std::size_t n)
{
    require_min_dimension(n);
    const element z = z_parameter(y, x);
    const square_matrix vectors = p1_matrix(z, n);
    const element alpha = x * x;
    std::vector<eigenpair> out;
    out.reserve(n);
    element lambda = one(x.parent());
    for (std::size_t j = 0; j < n; ++j) {
        out.push_back({lambda, vectors.column(j)});
        lambda *= alpha;
    }
    return out;
}

/// Closed-form criterion: x^2 != 1 or y = 0. Builds no matrix.
inline bool is_diagonalizable(const element& y, const element& x, std::size_t n)
{
    require_min_dimension(n);
    detail::require_nonzero_x(x);
    if (!(y.parent() == x.parent())) throw error(errc::mixed_fields, "y and x belong to different fields");
    return !(x * x).is_one() || y.is_zero();
}

/// For an upper-triangular m: true iff sum over distinct diagonal values l of
/// n - rank(m - l I) equals n.
inline bool diagonalizable_oracle(const square_matrix& m)
{
    if (!m.is_upper_triangular()) throw error(errc::not_triangular, "oracle needs an upper-triangular matrix");
    const std::size_t n = m.size();
    const square_matrix id = identity(m.parent(), n);
    std::vector<element> seen;
    std::size_t geometric = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const element& lambda = m(i, i);
        bool dup = false;
        for (const auto& s : seen) dup = dup || s == lambda;
        if (dup) continue;
        seen.push_back(lambda);
        geometric += n - rank(m - lambda * id);
    }
    return geometric == n;
}

} // namespace zlp
