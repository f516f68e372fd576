#pragma once

/**
 * @file census.hpp
 * @brief Exhaustive sweep of Q(y, x) over a finite field.
 *
 * One row per (y, x) with y in F and x in F^x, ordered by (y, x) where each
 * element is ranked by its index (the base-p reading of its coefficients).
 * Workers fill preassigned slots, so the output does not depend on the
 * thread count.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "io.hpp"
#include "order.hpp"
#include "spectral.hpp"

namespace zlp {

struct census_row {
    element y;
    element x;
    order_result order;
    bool diagonalizable;
    // Filled only when verification was requested.
    std::optional<bruteforce_result> oracle_order;
    std::optional<bool> oracle_diagonalizable;

    bool verified_ok() const
    {
        if (oracle_order && !(*oracle_order == bruteforce_result{order})) return false;
        if (oracle_diagonalizable && *oracle_diagonalizable != diagonalizable) return false;
        return true;
    }
};

struct census {
    field f;
    std::size_t n;
    std::vector<census_row> rows;

    std::size_t mismatches() const
    {
        return static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(), [](const census_row& r) { return !r.verified_ok(); }));
    }
};

inline census_row census_entry(const element& y, const element& x, std::size_t n, bool verify)
{
    census_row row{y, x, q_order(y, x, n), is_diagonalizable(y, x, n), std::nullopt, std::nullopt};
    if (verify) {
        const square_matrix q = q_matrix(y, x, n);
        row.oracle_order = matrix_order_bruteforce(q, default_cap(y.parent(), n));
        row.oracle_diagonalizable = diagonalizable_oracle(q);
    }
    return row;
}

/// threads == 0 picks std::thread::hardware_concurrency().
inline census run_census(const field& f, std::size_t n, bool verify, unsigned threads = 1)
{
    if (!f.is_finite()) throw error(errc::invalid_argument, "census requires a finite field");
    require_min_dimension(n);

    const auto all = elements(f);
    std::vector<std::pair<std::size_t, std::size_t>> cells; // (y index, x index)
    for (std::size_t yi = 0; yi < all.size(); ++yi)
        for (std::size_t xi = 1; xi < all.size(); ++xi) cells.emplace_back(yi, xi);

    std::vector<std::optional<census_row>> slots(cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++)
            slots[i] = census_entry(all[cells[i].first], all[cells[i].second], n, verify);
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }

    census c{f, n, {}};
    c.rows.reserve(slots.size());
    for (auto& s : slots) c.rows.push_back(std::move(*s));
    return c;
}

inline std::string census_csv(const census& c)
{
    std::ostringstream os;
    os << "field,n,y,x,order,diagonalizable\n";
    const std::string spec = csv_escape(c.f.spec());
    for (const auto& r : c.rows) {
        os << spec << ',' << c.n << ',' << csv_escape(r.y.to_string()) << ',' << csv_escape(r.x.to_string()) << ','
           << r.order.to_string() << ',' << (r.diagonalizable ? "true" : "false") << '\n';
    }
    return os.str();
}

inline json census_json(const census& c)
{
    json rows = json::array();
    for (const auto& r : c.rows) {
        json order = r.order.is_finite() ? json(r.order.value()) : json("infinite");
        rows.push_back(json{{"y", r.y.to_string()}, {"x", r.x.to_string()}, {"order", order},
                            {"diagonalizable", r.diagonalizable}});
    }
    return json{{"field", c.f.spec()}, {"n", c.n}, {"rows", std::move(rows)}};
}

inline std::string census_table(const census& c)
{
    std::size_t wy = 1, wx = 1, wo = 5;
    for (const auto& r : c.rows) {
        wy = std::max(wy, r.y.to_string().size());
        wx = std::max(wx, r.x.to_string().size());
        wo = std::max(wo, r.order.to_string().size());
    }
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(w, s.size()), ' ');
        return s;
    };
    std::ostringstream os;
    os << "field " << c.f.spec() << ", n = " << c.n << '\n';
    os << pad("y", wy) << "  " << pad("x", wx) << "  " << pad("order", wo) << "  diagonalizable\n";
    for (const auto& r : c.rows) {
        os << pad(r.y.to_string(), wy) << "  " << pad(r.x.to_string(), wx) << "  " << pad(r.order.to_string(), wo)
           << "  " << (r.diagonalizable ? "yes" : "no") << '\n';
    }
    return os.str();
}

} // namespace zlp
