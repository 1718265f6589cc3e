// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <deltared/harness.hpp>

#include <fmt/format.h>

#include <cmath>
#include <functional>
#include <iostream>

using namespace deltared;
using std::string;

namespace
{
    struct Outcome
    {
        bool passed = true;
        string detail;
    };

    auto failing(string detail) -> Outcome
    {
        return {false, std::move(detail)};
    }

    const auto & corpus()
    {
        static const auto items = default_corpus({});
        return items;
    }

    auto crossover_constants_match() -> Outcome
    {
        struct Row { const char * name; double value; double reported; double residual; };
        const double a = x1(), b = x_quarter();
        const double c = solve_x0_vertex(2), d = solve_x0p_vertex(2);
        const double e = solve_x0_edge(3, X0Variant::Statement), f = solve_x0p_edge(3);
        const Row rows[] = {
            {"x1", a, 3.512, std::exp((a - 1) / 2) - a},
            {"x_quarter", b, 7.908, 0.25 * std::exp((b - 1) / 2) - b},
            {"x0_vertex(2)", c, 2.438, std::pow(4.0 / (5.0 - c), 2.0) - c},
            {"x0p_vertex(2)", d, 5.594, std::pow(6.0 / 8.0, 2.0) * std::exp((d - 1) / 2) - d},
            {"x0_edge(3)", e, 2.088, std::pow(5.0 / (6.0 - e), 3.0) - e},
            {"x0p_edge(3)", f, 3.991, std::sqrt(4.0 / 5.0) * std::exp((f - 1) / 2) - f},
        };
        double worst_residual = 0.0;
        for (const auto & r : rows) {
            if (std::abs(r.value - r.reported) > 1e-3)
                return failing(fmt::format("{} = {} vs {}", r.name, format_real(r.value), r.reported));
            worst_residual = std::max(worst_residual, std::abs(r.residual));
        }
        if (worst_residual > 1e-9)
            return failing("residual " + format_real(worst_residual));
        return {true, fmt::format("x1={} x_quarter={} x0v(2)={} x0'v(2)={} x0e(3)={} x0'e(3)={} max residual {}",
            format_real(a), format_real(b), format_real(c), format_real(d), format_real(e), format_real(f),
            format_real(worst_residual))};
    }

    auto sharpness() -> Outcome
    {
        std::vector<string> misses;
        for (std::uint64_t k = 1; k <= 8; ++k)
            for (std::uint64_t t = 1; t <= 5; ++t) {
                auto g = gen_star_forest(k, t);
                auto s = stats(g);
                const Rational tq(static_cast<std::int64_t>(t));
                auto lv = lambda_exact(g).value;
                auto le = lambda_e_exact(g).value;
                if (lv != t || le != t)
                    misses.push_back(fmt::format("k={},t={}: lambda={} lambda_e={}", k, t, lv, le));
                if (exact_bound_v1(k, s.t, s.n) != tq)
                    misses.push_back(fmt::format("k={},t={}: b1_v", k, t));
                if (exact_bound_e1(k, s.t, s.m) != tq)
                    misses.push_back(fmt::format("k={},t={}: b1_e", k, t));
                auto v2 = exact_bound_v2(k, s.t, s.n);
                if (! v2 || *v2 != tq)
                    misses.push_back(fmt::format("k={},t={}: b2_v = {}", k, t, format_real(bound_v2(k, s.t, s.n))));
                if (k >= 2) {
                    auto e2 = exact_bound_e2(k, s.t, s.m);
                    if (! e2 || *e2 != tq)
                        misses.push_back(fmt::format("k={},t={}: b2_e", k, t));
                }
            }
        if (misses.empty())
            return {true, "40 star forests, every bound equals t in exact arithmetic"};
        // a K_{1,1} forest has both ends of every edge in M, so b2_v evaluates to 3t/2
        string detail = fmt::format("{} misses, first: {}", misses.size(), misses.front());
        if (misses.size() <= 5)
            for (std::size_t i = 1; i < misses.size(); ++i)
                detail += "; " + misses[i];
        return failing(detail);
    }

    auto bound_validity() -> Outcome
    {
        std::size_t graphs = 0;
        for (const auto & item : corpus()) {
            const auto & g = item.graph;
            if (g.vertex_count() == 0 || max_degree(g) == 0)
                continue;
            auto s = stats(g);
            auto lv = lambda_exact(g, kDefaultBudget, SearchStrategy::Exhaustive);
            auto le = lambda_e_exact(g, kDefaultBudget, SearchStrategy::Exhaustive);
            if (lv.status != SearchStatus::Optimal || le.status != SearchStatus::Optimal)
                return failing(item.name + ": search budget exhausted");
            auto floored = [](double b) { return std::floor(b + 1e-9); };
            const double l = double(lv.value), e = double(le.value);
            bool ok = l <= floored(bound_v1(s.k, s.t, s.n)) && l <= floored(bound_v2(s.k, s.t, s.n))
                && e <= floored(bound_e1(s.k, s.t, s.m)) && (s.k < 2 || e <= floored(bound_e2(s.k, s.t, s.m)));
            if (! ok)
                return failing(item.name + ": exact value above a floored bound");
            ++graphs;
        }
        return {true, fmt::format("{} corpus graphs with k >= 1 solved by exhaustive enumeration, zero violations", graphs)};
    }

    auto k2_identity() -> Outcome
    {
        double worst = 0.0;
        for (std::uint64_t t = 1; t <= 100; ++t)
            for (std::uint64_t m = t; m <= 2 * t; ++m) {
                const double closed = double(2 * t - m) * double(3 * m - 2 * t) / double(12 * t);
                const double deviation = std::abs((bound_e2(2, t, m) - bound_e1(2, t, m)) - closed);
                worst = std::max(worst, deviation);
                if (deviation > 1e-12)
                    return failing(fmt::format("t={} m={} deviation {}", t, m, format_real(deviation)));
                if (t < m && m < 2 * t && ! (bound_e2(2, t, m) - bound_e1(2, t, m) > 0.0))
                    return failing(fmt::format("t={} m={} not positive", t, m));
            }
        return {true, "max deviation " + format_real(worst)};
    }

    auto minimizer_identities() -> Outcome
    {
        double worst = 0.0;
        std::size_t points = 0;
        for (std::uint64_t k = 1; k <= 10; ++k)
            for (std::uint64_t t = 1; t <= 10; ++t)
                for (std::uint64_t j = 1; j <= 10; ++j) {
                    const std::uint64_t n = std::max<std::uint64_t>(1, (k + 1) * t * j / 10);
                    const std::uint64_t ke = k + 1;
                    const std::uint64_t m = std::max<std::uint64_t>(1, ke * t * j / 10);
                    const double v2 = bound_v2(k, t, n), e2 = bound_e2(ke, t, m);
                    worst = std::max({worst, std::abs(u_vertex(p_star_vertex(k, t, n), k, t, n) - v2),
                        std::abs(u_edge(p_star_edge(ke, t, m), ke, t, m) - e2)});
                    for (int i = 0; i <= 1000; ++i) {
                        const double p = i / 1000.0;
                        if (u_vertex(p, k, t, n) < v2 - 1e-12 || u_edge(p, ke, t, m) < e2 - 1e-12)
                            return failing(fmt::format("grid beats b2 at k={} t={} p={}", k, t, p));
                    }
                    if (v2 > bound_v_ln(k, t, n) + 1e-12)
                        return failing(fmt::format("b2_vertex above ln bound at k={} t={} n={}", k, t, n));
                    ++points;
                }
        if (worst > 1e-12)
            return failing("|u(p*) - b2| = " + format_real(worst));
        return {true, fmt::format("{} grid points, max |u(p*) - b2| = {}", points, format_real(worst))};
    }

    auto monte_carlo_star() -> Outcome
    {
        constexpr double reference = 4.5604;
        auto g = gen_star_forest(3, 4);
        auto r = monte_carlo(g, ReductionKind::Vertex, 0.3, 100'000, 1);
        const double se = r.empirical_std / std::sqrt(double(r.trials));
        const double z_reference = (r.empirical_mean - reference) / se;
        string detail = fmt::format("mean {} se {}; z vs {} = {}; exact expectation np + t(1-p)^(k+1) with n = {} is {}, z = {}",
            format_real(r.empirical_mean), format_real(se), reference, format_real(z_reference), stats(g).n,
            format_real(r.expected), format_real(r.z_score));
        if (! r.all_verified)
            return failing("a sampled set is not reducing; " + detail);
        if (std::abs(z_reference) > 3.0)
            return failing(detail);
        return {true, detail};
    }

    auto classifier_soundness() -> Outcome
    {
        std::size_t rows = 0;
        for (auto kind : {ReductionKind::Vertex, ReductionKind::Edge}) {
            SweepSpec spec;
            spec.kind = kind;
            spec.k_min = 2;
            spec.k_max = 50;
            spec.points = 200;
            auto result = sweep(spec);
            if (result.disagreements != 0)
                return failing(fmt::format("{} sweep: {} disagreements", to_string(kind), result.disagreements));
            rows += result.rows.size();
        }
        SweepSpec graph_edges;
        graph_edges.mode = Mode::Graph;
        auto realizable = sweep(graph_edges);
        if (realizable.theorem_b2 != 0 || realizable.gap != 0 || realizable.disagreements != 0)
            return failing("graph-mode edge sweep produced labels other than TheoremB1/Equal");
        return {true, fmt::format("{} abstract rows, 0 disagreements; graph-mode edge rows: {} TheoremB1, {} Equal", rows,
            realizable.theorem_b1, realizable.equal)};
    }

    auto asymptotics() -> Outcome
    {
        const double a = solve_x0_edge(1e6), b = solve_x0p_edge(1e6);
        const double da = std::abs(a - x1()), db = std::abs(b - x1());
        string detail = fmt::format("x0_edge(1e6)={} x0'_edge(1e6)={} deviations {} {}", format_real(a), format_real(b),
            format_real(da), format_real(db));
        if (! std::isfinite(a) || ! std::isfinite(b) || da >= 1e-3 || db >= 1e-3)
            return failing(detail);
        return {true, detail};
    }

    auto lemma_scans() -> Outcome
    {
        auto grid = log_grid(1.0, 1e6, 1000);
        auto limit = monotonicity_scan(f_limit, grid, Direction::Decreasing);
        if (! limit.monotone)
            return failing("f_limit not strictly decreasing");
        if (! (limit.last_value - std::exp(1.0) < 1e-5))
            return failing("f_limit(1e6) - e = " + format_real(limit.last_value - std::exp(1.0)));

        auto fine = linear_grid(1.0, 20.0, 1901);
        const double step = fine[1] - fine[0];
        for (double c : {1.0, 0.5, 0.25}) {
            const double at = grid_argmin([c](double x) { return f_c(c, x); }, fine);
            if (std::abs(at - 2.0) > step)
                return failing(fmt::format("f_c({}) minimum at {}", c, at));
        }

        std::vector<double> ks;
        for (int k = 3; k <= 100; ++k)
            ks.push_back(k);
        if (! monotonicity_scan([](double k) { return solve_x0_vertex(k); }, ks, Direction::Increasing).monotone)
            return failing("x0_vertex not strictly increasing on 3..100");
        if (! monotonicity_scan([](double k) { return solve_x0p_edge(k); }, ks, Direction::Decreasing).monotone)
            return failing("x0'_edge not strictly decreasing on 3..100");
        return {true, fmt::format("f_limit(1e6) - e = {}; f_c minimised at 2 within {}; x0_vertex up, x0'_edge down",
            format_real(limit.last_value - std::exp(1.0)), format_real(step))};
    }

    auto oracle_cross_check() -> Outcome
    {
        std::size_t small = 0, all = 0;
        for (const auto & item : corpus()) {
            const auto & g = item.graph;
            if (g.vertex_count() == 0)
                continue;
            auto lv = lambda_exact(g);
            auto le = lambda_e_exact(g);
            if (g.vertex_count() <= 10) {
                auto xv = lambda_exact(g, kDefaultBudget, SearchStrategy::Exhaustive);
                auto xe = lambda_e_exact(g, kDefaultBudget, SearchStrategy::Exhaustive);
                if (xv.value != lv.value || xe.value != le.value)
                    return failing(item.name + ": branch and bound differs from exhaustive enumeration");
                ++small;
            }
            if (lambda_exact(derive_gv(g).graph).value != lv.value)
                return failing(item.name + ": lambda(G) != lambda(G_v)");
            if (lambda_e_exact(derive_ge(g).graph).value != le.value)
                return failing(item.name + ": lambda_e(G) != lambda_e(G_e)");
            ++all;
        }
        return {true, fmt::format("{} graphs cross-checked exhaustively, {} graphs satisfy the G_v/G_e equalities", small, all)};
    }
}

int main()
{
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"crossover constants", crossover_constants_match},
        {"sharpness on star forests", sharpness},
        {"bound validity on the corpus", bound_validity},
        {"k=2 edge identity", k2_identity},
        {"minimizer identities", minimizer_identities},
        {"Monte Carlo star forest k=3 t=4 p=0.3", monte_carlo_star},
        {"classifier soundness", classifier_soundness},
        {"large-k asymptotics", asymptotics},
        {"lemma scans", lemma_scans},
        {"oracle cross-check", oracle_cross_check},
    };

    std::cout << version_string() << " acceptance\n";
    int failures = 0;
    int index = 0;
    for (const auto & [name, run] : criteria) {
        ++index;
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception & e) {
            outcome = failing(string("exception: ") + e.what());
        }
        failures += ! outcome.passed;
        std::cout << fmt::format("{} {:>2} {}: {}\n", outcome.passed ? "PASS" : "FAIL", index, name, outcome.detail);
    }
    std::cout << fmt::format("{} of {} criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
