// zlp: build Pascal-family matrices, factorize Zhang-Liu matrices, compute
// their orders and sweep censuses over small fields.
//
// Exit codes: 0 ok, 1 selftest failure, 2 parse error, 3 precondition
// violation, 4 factorize request with x^2 = 1, 5 census over an infinite
// field, 6 formula/oracle disagreement.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <zlp/zlp.hpp>

namespace {

enum exit_code : int {
    ok = 0,
    selftest_failure = 1,
    parse_failure = 2,
    precondition = 3,
    not_factorizable = 4,
    unsupported_domain = 5,
    oracle_mismatch = 6,
};

struct parse_failure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Errors raised while reading user input are parse failures (exit 2).
template <class F>
auto parsing(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const zlp::error& e) {
        throw parse_failure_error(e.what());
    }
}

struct common_options {
    std::string field_spec;
    std::size_t n = 2;
    std::string format = "table";
};

void print_matrix(const zlp::square_matrix& m, const std::string& format)
{
    if (format == "json") {
        std::cout << zlp::to_json(m).dump() << '\n';
    } else if (format == "csv") {
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) std::cout << (j ? "," : "") << zlp::csv_escape(m(i, j).to_string());
            std::cout << '\n';
        }
    } else {
        std::cout << zlp::to_text(m);
    }
}

int run_matrix(const common_options& o, const std::string& kind, const std::string& params)
{
    const auto args = parsing([&] {
        auto f = zlp::parse_field(o.field_spec);
        std::vector<zlp::element> args;
        for (const auto& t : zlp::split_top_level(params)) args.push_back(zlp::parse_element(f, t));
        const std::size_t want = kind == "q" ? 2 : 1;
        if (args.size() != want)
            throw zlp::error(zlp::errc::parse_error, "kind " + kind + " takes " + std::to_string(want) + " parameter(s)");
        return args;
    });
    zlp::square_matrix m = kind == "p1"   ? zlp::p1_matrix(args[0], o.n)
                           : kind == "p2" ? zlp::p2_matrix(args[0], o.n)
                           : kind == "d"  ? zlp::d_matrix(args[0], o.n)
                                          : zlp::q_matrix(args[0], args[1], o.n);
    print_matrix(m, o.format);
    return ok;
}

std::pair<zlp::element, zlp::element> parse_pair(const common_options& o, const std::string& y, const std::string& x)
{
    return parsing([&] {
        auto f = zlp::parse_field(o.field_spec);
        return std::pair{zlp::parse_element(f, y), zlp::parse_element(f, x)};
    });
}

int run_factorize(const common_options& o, const std::string& ytext, const std::string& xtext)
{
    const auto [y, x] = parse_pair(o, ytext, xtext);
    zlp::require_min_dimension(o.n);
    if (x.is_zero()) throw zlp::error(zlp::errc::zero_parameter, "x must be nonzero");
    if ((x * x).is_one()) {
        std::cerr << "error: x^2 = 1, so z = yx/(x^2-1) does not exist. Q(y,x) is diagonalizable iff x is not in "
                     "{1,-1} or y = 0; ";
        if (y.is_zero())
            std::cerr << "here y = 0 and Q(y,x) is already the identity.\n";
        else
            std::cerr << "here y != 0, so Q(y,x) is not diagonalizable.\n";
        return not_factorizable;
    }
    const auto d = zlp::factorize_q(y, x, o.n);
    const bool verified = zlp::verify_factorization(d);
    if (o.format == "json") {
        std::cout << zlp::to_json(d, verified).dump() << '\n';
    } else {
        std::cout << "field " << x.parent().spec() << ", n = " << o.n << ", y = " << y.to_string()
                  << ", x = " << x.to_string() << '\n'
                  << "z = " << d.z.to_string() << '\n'
                  << "P1(z) =\n"
                  << zlp::to_text(d.left) << "D(x^2) =\n"
                  << zlp::to_text(d.middle) << "P1(-z) =\n"
                  << zlp::to_text(d.right) << "verified = " << (verified ? "true" : "false") << '\n';
    }
    return verified ? ok : oracle_mismatch;
}

int run_order(const common_options& o, const std::string& ytext, const std::string& xtext, bool oracle,
              std::optional<std::uint64_t> cap)
{
    const auto [y, x] = parse_pair(o, ytext, xtext);
    const auto formula = zlp::q_order(y, x, o.n);
    if (!oracle) {
        if (o.format == "json")
            std::cout << zlp::to_json(formula).dump() << '\n';
        else
            std::cout << formula.to_string() << '\n';
        return ok;
    }
    const auto brute = zlp::q_order_bruteforce(y, x, o.n, cap.value_or(zlp::default_cap(x.parent(), o.n)));
    const bool agree = zlp::agrees(formula, brute);
    if (o.format == "json") {
        std::cout << zlp::json{{"formula", zlp::to_json(formula)}, {"oracle", zlp::to_json(brute)}, {"agree", agree}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "formula=" << formula.to_string() << '\n' << "oracle=" << zlp::to_string(brute) << '\n';
    }
    if (!agree) std::cerr << "error: formula and brute-force oracle disagree\n";
    return agree ? ok : oracle_mismatch;
}

int run_census(const common_options& o, bool verify, unsigned threads)
{
    const auto f = parsing([&] { return zlp::parse_field(o.field_spec); });
    if (!f.is_finite()) {
        std::cerr << "error: census needs a finite field, got " << f.spec() << '\n';
        return unsupported_domain;
    }
    const auto c = zlp::run_census(f, o.n, verify, threads);
    if (o.format == "csv")
        std::cout << zlp::census_csv(c);
    else if (o.format == "json")
        std::cout << zlp::census_json(c).dump() << '\n';
    else
        std::cout << zlp::census_table(c);
    if (!verify) return ok;
    for (const auto& r : c.rows) {
        if (r.verified_ok()) continue;
        std::cerr << "mismatch at y=" << r.y.to_string() << " x=" << r.x.to_string() << ": formula order "
                  << r.order.to_string() << ", oracle " << zlp::to_string(*r.oracle_order) << "; criterion "
                  << r.diagonalizable << ", rank oracle " << *r.oracle_diagonalizable << '\n';
    }
    return c.mismatches() == 0 ? ok : oracle_mismatch;
}

int run_selftest()
{
    bool all = true;
    for (const auto& s : zlp::run_selftest()) {
        std::cout << s.name << ": " << s.passed << "/" << (s.passed + s.failed) << " passed\n";
        for (const auto& f : s.failures) std::cout << "  FAILED " << f << '\n';
        all = all && s.failed == 0;
    }
    std::cout << (all ? "all suites passed" : "selftest FAILED") << '\n';
    return all ? ok : selftest_failure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Pascal and Zhang-Liu matrices over finite fields and the rationals"};
    app.require_subcommand(1);

    common_options o;
    std::string kind, params, y, x;
    bool oracle = false, verify = false;
    std::optional<std::uint64_t> cap;
    unsigned threads = 1;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--field", o.field_spec, "gf:p, gf:p^k, gf:p^k:m=c0,...,ck or qq")->required();
        cmd->add_option("--n", o.n, "matrix dimension")->required();
        if (with_format)
            cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "csv", "json"}));
    };

    auto* matrix = app.add_subcommand("matrix", "print P1(y), P2(x), Q(y,x) or D(alpha)");
    add_common(matrix, true);
    matrix->add_option("--kind", kind, "p1, p2, q or d")->required()->check(CLI::IsMember({"p1", "p2", "q", "d"}));
    matrix->add_option("--params", params, "comma-separated element texts (q takes y,x)")->required();

    auto* factorize = app.add_subcommand("factorize", "eigen-decomposition Q(y,x) = P1(z) D(x^2) P1(-z)");
    add_common(factorize, true);
    factorize->add_option("--y", y)->required();
    factorize->add_option("--x", x)->required();

    auto* order = app.add_subcommand("order", "multiplicative order of Q(y,x)");
    add_common(order, true);
    order->add_option("--y", y)->required();
    order->add_option("--x", x)->required();
    order->add_flag("--oracle", oracle, "also run the brute-force oracle");
    order->add_option("--cap", cap, "brute-force power limit");

    auto* census = app.add_subcommand("census", "order and diagonalizability for every (y, x)");
    add_common(census, true);
    census->add_flag("--verify", verify, "check each row against the brute-force and rank oracles");
    census->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

    auto* selftest = app.add_subcommand("selftest", "run the packaged invariant suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_failure;
    }

    try {
        if (*matrix) return run_matrix(o, kind, params);
        if (*factorize) return run_factorize(o, y, x);
        if (*order) return run_order(o, y, x, oracle, cap);
        if (*census) return run_census(o, verify, threads);
        if (*selftest) return run_selftest();
    } catch (const parse_failure_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return parse_failure;
    } catch (const zlp::error& e) {
        std::cerr << "error: " << e.what() << " (" << zlp::to_string(e.code()) << ")\n";
        return precondition;
    }
    return ok;
}
