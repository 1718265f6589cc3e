#include "deltared/error.hpp"
#include "deltared/harness.hpp"

#include <fmt/format.h>

#include <cmath>
#include <functional>

using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace deltared {

namespace
{
    auto reproducer(const CorpusItem & item) -> string
    {
        string out = "# corpus item: " + item.name + "\n";
        if (item.seed)
            out += "# seed: " + std::to_string(*item.seed) + "\n";
        return out + serialize(item.graph);
    }

    auto fail(CheckResult & r, string detail) -> CheckResult &
    {
        r.passed = false;
        r.detail = std::move(detail);
        return r;
    }

    auto fail(CheckResult & r, const CorpusItem & item, const string & detail) -> CheckResult &
    {
        fail(r, item.name + ": " + detail);
        r.reproducer = reproducer(item);
        return r;
    }

    struct Solved
    {
        ExactResult lambda;
        ExactResult lambda_e;
    };

    class Verifier
    {
    public:
        Verifier(const vector<CorpusItem> & corpus, const VerifyOptions & options) :
            _corpus(corpus),
            _options(options)
        {
        }

        auto run() -> vector<CheckResult>
        {
            const std::pair<const char *, std::function<CheckResult(Verifier &)>> checks[] = {
                {"stats-invariants", &Verifier::stats_invariants},
                {"derived-subgraphs", &Verifier::derived_subgraphs},
                {"exact-oracles", &Verifier::exact_oracles},
                {"reduction-equalities", &Verifier::reduction_equalities},
                {"cross-oracle", &Verifier::cross_oracle},
                {"bound-validity", &Verifier::bound_validity},
                {"sharpness", &Verifier::sharpness},
                {"k2-identity", &Verifier::k2_identity},
                {"minimizer", &Verifier::minimizer},
                {"sampling", &Verifier::sampling},
                {"lemma-scans", &Verifier::lemma_scans},
                {"constants", &Verifier::constants},
                {"classifier", &Verifier::classifier},
            };

            vector<CheckResult> results;
            for (const auto & [name, check] : checks) {
                auto r = check(*this);
                r.name = name;
                results.push_back(std::move(r));
                if (! results.back().passed)
                    break;
            }
            return results;
        }

    private:
        // graphs with at least one vertex
        auto nonempty() const -> vector<const CorpusItem *>
        {
            vector<const CorpusItem *> items;
            for (const auto & item : _corpus)
                if (item.graph.vertex_count() > 0)
                    items.push_back(&item);
            return items;
        }

        auto stats_invariants() -> CheckResult
        {
            CheckResult r;
            size_t count = 0;
            for (auto * item : nonempty()) {
                auto s = stats(item->graph);
                if (s.t < 1)
                    return fail(r, *item, "t = 0");
                if (s.n > (s.k + 1) * s.t)
                    return fail(r, *item, "n > (k+1)t");
                if (s.m > s.k * s.t)
                    return fail(r, *item, "m > kt");
                if (2 * s.m < s.k * s.t)
                    return fail(r, *item, "2m < kt");
                ++count;
            }
            r.detail = fmt::format("{} graphs", count);
            return r;
        }

        auto derived_subgraphs() -> CheckResult
        {
            CheckResult r;
            for (auto * item : nonempty()) {
                const auto & g = item->graph;
                const auto k = max_degree(g);
                const auto top = max_degree_set(g);
                for (const auto * which : {"G_v", "G_e"}) {
                    auto d = string(which) == "G_v" ? derive_gv(g) : derive_ge(g);
                    if (max_degree(d.graph) != k)
                        return fail(r, *item, fmt::format("max degree of {} differs", which));
                    vector<Vertex> mapped;
                    for (auto v : max_degree_set(d.graph))
                        mapped.push_back(d.original_index[v]);
                    if (mapped != top)
                        return fail(r, *item, fmt::format("M({}) differs from M(G)", which));
                }
                auto gv = derive_gv(g);
                if (derive_gv(gv.graph).graph != gv.graph)
                    return fail(r, *item, "derive_gv is not idempotent");
            }
            r.detail = "max degree and M preserved; derive_gv idempotent";
            return r;
        }

        auto exact_oracles() -> CheckResult
        {
            CheckResult r;
            _solved.clear();
            for (const auto & item : _corpus) {
                if (item.graph.vertex_count() == 0) {
                    _solved.emplace_back();
                    continue;
                }
                Solved s{lambda_exact(item.graph, _options.budget), lambda_e_exact(item.graph, _options.budget)};
                if (s.lambda.status != SearchStatus::Optimal || s.lambda_e.status != SearchStatus::Optimal) {
                    r.budget_exhausted = true;
                    return fail(r, item, "search budget exhausted");
                }
                if (! s.lambda.certificate.verified || ! s.lambda_e.certificate.verified)
                    return fail(r, item, "certificate does not verify");
                _solved.push_back(std::move(s));
            }
            r.detail = fmt::format("{} graphs solved exactly", _solved.size());
            return r;
        }

        auto reduction_equalities() -> CheckResult
        {
            CheckResult r;
            for (size_t i = 0; i < _corpus.size(); ++i) {
                const auto & g = _corpus[i].graph;
                if (g.vertex_count() == 0)
                    continue;
                auto lv = lambda_exact(derive_gv(g).graph, _options.budget);
                auto le = lambda_e_exact(derive_ge(g).graph, _options.budget);
                if (lv.status != SearchStatus::Optimal || le.status != SearchStatus::Optimal) {
                    r.budget_exhausted = true;
                    return fail(r, _corpus[i], "search budget exhausted on a derived subgraph");
                }
                if (lv.value != _solved[i].lambda.value)
                    return fail(r, _corpus[i], fmt::format("lambda(G) = {} but lambda(G_v) = {}", _solved[i].lambda.value, lv.value));
                if (le.value != _solved[i].lambda_e.value)
                    return fail(r, _corpus[i], fmt::format("lambda_e(G) = {} but lambda_e(G_e) = {}", _solved[i].lambda_e.value, le.value));
            }
            r.detail = "lambda(G) = lambda(G_v) and lambda_e(G) = lambda_e(G_e)";
            return r;
        }

        auto cross_oracle() -> CheckResult
        {
            CheckResult r;
            size_t count = 0;
            for (size_t i = 0; i < _corpus.size(); ++i) {
                const auto & g = _corpus[i].graph;
                if (g.vertex_count() == 0 || g.vertex_count() > _options.exhaustive_max_vertices)
                    continue;
                auto lv = lambda_exact(g, _options.budget, SearchStrategy::Exhaustive);
                auto le = lambda_e_exact(g, _options.budget, SearchStrategy::Exhaustive);
                if (lv.status != SearchStatus::Optimal || le.status != SearchStatus::Optimal) {
                    r.budget_exhausted = true;
                    return fail(r, _corpus[i], "exhaustive search budget exhausted");
                }
                if (lv.certificate.vertices != _solved[i].lambda.certificate.vertices)
                    return fail(r, _corpus[i], "branch and bound and exhaustive disagree on lambda");
                if (le.certificate.edges != _solved[i].lambda_e.certificate.edges)
                    return fail(r, _corpus[i], "branch and bound and exhaustive disagree on lambda_e");
                ++count;
            }
            r.detail = fmt::format("{} graphs with <= {} vertices", count, _options.exhaustive_max_vertices);
            return r;
        }

        auto mutated(const char * which, double value) const -> double
        {
            return _options.broken_bound && *_options.broken_bound == which ? value * 0.5 : value;
        }

        auto bound_validity() -> CheckResult
        {
            CheckResult r;
            size_t count = 0;
            auto floored = [](double b) { return std::floor(b + 1e-9); };
            for (size_t i = 0; i < _corpus.size(); ++i) {
                const auto & g = _corpus[i].graph;
                if (g.vertex_count() == 0)
                    continue;
                auto s = stats(g);
                if (s.k == 0)
                    continue;
                const auto lv = static_cast<double>(_solved[i].lambda.value);
                const auto le = static_cast<double>(_solved[i].lambda_e.value);
                const std::pair<const char *, double> vertex_bounds[] = {
                    {"v1", bound_v1(s.k, s.t, s.n)}, {"v2", bound_v2(s.k, s.t, s.n)}};
                for (const auto & [name, b] : vertex_bounds)
                    if (lv > floored(mutated(name, b)))
                        return fail(r, _corpus[i], fmt::format("lambda = {} exceeds bound {} = {}", lv, name, format_real(mutated(name, b))));
                if (le > floored(mutated("e1", bound_e1(s.k, s.t, s.m))))
                    return fail(r, _corpus[i], fmt::format("lambda_e = {} exceeds bound e1", le));
                if (s.k >= 2 && le > floored(mutated("e2", bound_e2(s.k, s.t, s.m))))
                    return fail(r, _corpus[i], fmt::format("lambda_e = {} exceeds bound e2", le));
                ++count;
            }
            r.detail = fmt::format("{} graphs with k >= 1, zero violations", count);
            return r;
        }

        // t stars K_{1,k}. For k >= 2 every bound equals t; for k = 1 both ends of
        // each edge have maximum degree, so M has 2t vertices and only b1 is attained.
        auto sharpness() -> CheckResult
        {
            CheckResult r;
            for (uint64_t k = 1; k <= 8; ++k)
                for (uint64_t t = 1; t <= 5; ++t) {
                    CorpusItem item{fmt::format("star:{},{}", k, t), gen_star_forest(k, t), std::nullopt};
                    auto s = stats(item.graph);
                    const uint64_t top = k == 1 ? 2 * t : t;
                    if (s != GraphStats{k, top, (k + 1) * t, k * t})
                        return fail(r, item, "star forest stats are not (k, t, (k+1)t, kt)");
                    auto lv = lambda_exact(item.graph, _options.budget);
                    auto le = lambda_e_exact(item.graph, _options.budget);
                    if (lv.status != SearchStatus::Optimal || lv.value != t || le.status != SearchStatus::Optimal || le.value != t)
                        return fail(r, item, "lambda or lambda_e differs from the number of stars");
                    const Rational tq(static_cast<std::int64_t>(t));
                    const double td = static_cast<double>(t);
                    if (exact_bound_v1(k, s.t, s.n) != tq || exact_bound_e1(k, s.t, s.m) != tq)
                        return fail(r, item, "a rational b1 bound differs from the number of stars");
                    if (bound_v1(k, s.t, s.n) != td || bound_e1(k, s.t, s.m) != td)
                        return fail(r, item, "a floating-point b1 bound differs from the number of stars");
                    if (k == 1) {
                        if (! (bound_v2(k, s.t, s.n) > td))
                            return fail(r, item, "b2 vertex bound not above b1 for k = 1");
                        continue;
                    }
                    if (exact_bound_v2(k, s.t, s.n) != tq || exact_bound_e2(k, s.t, s.m) != tq)
                        return fail(r, item, "a rational b2 bound differs from t");
                    if (bound_v2(k, s.t, s.n) != td || bound_e2(k, s.t, s.m) != td)
                        return fail(r, item, "a floating-point b2 bound differs from t");
                }
            r.detail = "k in 2..8, t in 1..5: lambda = lambda_e = every bound = t; k = 1: b1 bounds attained";
            return r;
        }

        auto k2_identity() -> CheckResult
        {
            CheckResult r;
            double worst = 0.0;
            for (uint64_t t = 1; t <= 100; ++t)
                for (uint64_t m = t; m <= 2 * t; ++m) {
                    const double diff = bound_e2(2, t, m) - bound_e1(2, t, m);
                    const double closed = k2_edge_identity(t, m);
                    worst = std::max(worst, std::abs(diff - closed));
                    if (std::abs(diff - closed) > 1e-12)
                        return fail(r, fmt::format("t={}, m={}: |(b2-b1) - identity| = {}", t, m, format_real(std::abs(diff - closed))));
                    if (*exact_bound_e2(2, t, m) - exact_bound_e1(2, t, m) != exact_k2_edge_identity(t, m))
                        return fail(r, fmt::format("t={}, m={}: rational identity fails", t, m));
                    if (m > t && m < 2 * t && ! (closed > 0.0))
                        return fail(r, fmt::format("t={}, m={}: identity not positive", t, m));
                }
            r.detail = "max deviation " + format_real(worst);
            return r;
        }

        auto minimizer() -> CheckResult
        {
            CheckResult r;
            const auto ps = linear_grid(0.0, 1.0, 1001);
            for (uint64_t k = 1; k <= 10; ++k)
                for (uint64_t t = 1; t <= 10; ++t)
                    for (uint64_t j = 1; j <= 10; ++j) {
                        const uint64_t n = std::max<uint64_t>(1, (k + 1) * t * j / 10);
                        const double b2 = bound_v2(k, t, n);
                        const double at_star = u_vertex(p_star_vertex(k, t, n), k, t, n);
                        if (std::abs(at_star - b2) > 1e-12)
                            return fail(r, fmt::format("vertex k={},t={},n={}: u(p*) - b2 = {}", k, t, n, format_real(at_star - b2)));
                        for (auto p : ps)
                            if (u_vertex(p, k, t, n) < b2 - 1e-12)
                                return fail(r, fmt::format("vertex k={},t={},n={}: u({}) below b2", k, t, n, p));
                        if (b2 > bound_v_ln(k, t, n) + 1e-12)
                            return fail(r, fmt::format("vertex k={},t={},n={}: b2 above the ln bound", k, t, n));

                        const uint64_t ke = k + 1;
                        const uint64_t m = std::max<uint64_t>(1, ke * t * j / 10);
                        const double e2 = bound_e2(ke, t, m);
                        const double e_star = u_edge(p_star_edge(ke, t, m), ke, t, m);
                        if (std::abs(e_star - e2) > 1e-12)
                            return fail(r, fmt::format("edge k={},t={},m={}: u(p*) - b2 = {}", ke, t, m, format_real(e_star - e2)));
                        for (auto p : ps)
                            if (u_edge(p, ke, t, m) < e2 - 1e-12)
                                return fail(r, fmt::format("edge k={},t={},m={}: u({}) below b2", ke, t, m, p));
                    }
            r.detail = "1000 vertex and 1000 edge parameter triples";
            return r;
        }

        auto sampling() -> CheckResult
        {
            CheckResult r;
            const auto star = gen_star_forest(3, 4);
            auto mv = monte_carlo(star, ReductionKind::Vertex, 0.3, _options.trials, _options.seed);
            auto me = monte_carlo(star, ReductionKind::Edge, 0.3, _options.trials, _options.seed);
            if (! mv.all_verified || ! me.all_verified)
                return fail(r, "a sampled set on star:3,4 is not reducing");
            if (! (std::abs(mv.z_score) <= 4.0))
                return fail(r, fmt::format("vertex sampling z = {} (mean {}, expected {})", format_real(mv.z_score),
                    format_real(mv.empirical_mean), format_real(mv.expected)));
            if (! (std::abs(me.z_score) <= 4.0))
                return fail(r, fmt::format("edge sampling z = {}", format_real(me.z_score)));

            for (size_t i = 0; i < _corpus.size(); ++i) {
                const auto & g = _corpus[i].graph;
                if (g.vertex_count() == 0 || max_degree(g) == 0)
                    continue;
                auto s = stats(g);
                const uint64_t seed = Rng::splitmix64(_options.seed + i);
                auto v = monte_carlo(g, ReductionKind::Vertex, p_star_vertex(s.k, s.t, s.n), 32, seed);
                if (! v.all_verified)
                    return fail(r, _corpus[i], "sampled vertex set is not reducing");
                if (v.min_size < _solved[i].lambda.value)
                    return fail(r, _corpus[i], "sampled vertex set smaller than lambda");
                if (s.k >= 2) {
                    auto e = monte_carlo(g, ReductionKind::Edge, p_star_edge(s.k, s.t, s.m), 32, seed);
                    if (! e.all_verified)
                        return fail(r, _corpus[i], "sampled edge set is not reducing");
                    if (v.min_size < _solved[i].lambda.value || e.min_size < _solved[i].lambda_e.value)
                        return fail(r, _corpus[i], "sampled edge set smaller than lambda_e");
                }
            }
            r.detail = fmt::format("star:3,4 p=0.3 z_vertex={} z_edge={}; corpus soundness", format_real(mv.z_score),
                format_real(me.z_score));
            return r;
        }

        auto lemma_scans() -> CheckResult
        {
            CheckResult r;
            auto grid = log_grid(1.0, 1e6, 1000);
            auto limit = monotonicity_scan(f_limit, grid, Direction::Decreasing);
            if (! limit.monotone)
                return fail(r, "f_limit not strictly decreasing");
            if (! (limit.last_value - std::exp(1.0) < 1e-5 && limit.last_value > std::exp(1.0)))
                return fail(r, "f_limit(1e6) not within 1e-5 above e");

            auto fine = linear_grid(1.0, 50.0, 4901);
            const double step = fine[1] - fine[0];
            const double argmin = grid_argmin([](double x) { return f_c(1.0, x); }, fine);
            if (std::abs(argmin - 2.0) > step)
                return fail(r, "f_c minimum not at x = 2");

            vector<double> ks;
            for (int k = 3; k <= 100; ++k)
                ks.push_back(k);
            if (! monotonicity_scan([](double k) { return solve_x0_vertex(k); }, ks, Direction::Increasing).monotone)
                return fail(r, "x0 (vertex) not increasing in k");
            if (! monotonicity_scan([](double k) { return solve_x0p_edge(k); }, ks, Direction::Decreasing).monotone)
                return fail(r, "x0' (edge) not decreasing in k");
            r.detail = "f_limit decreasing to e; f_c minimised at 2; x0 vertex increasing; x0' edge decreasing";
            return r;
        }

        auto constants() -> CheckResult
        {
            CheckResult r;
            struct Expect { const char * name; double value; double reported; double residual; };
            const double a = x1(), b = x_quarter(), c = solve_x0_vertex(2), d = solve_x0p_vertex(2);
            const double e = solve_x0_edge(3, X0Variant::Statement), f = solve_x0p_edge(3);
            const Expect table[] = {
                {"x1", a, 3.512, std::exp((a - 1) / 2) - a},
                {"x_quarter", b, 7.908, 0.25 * std::exp((b - 1) / 2) - b},
                {"x0_vertex(2)", c, 2.438, f_vertex(c, 2)},
                {"x0p_vertex(2)", d, 5.594, 0.5625 * std::exp((d - 1) / 2) - d},
                {"x0_edge(3)", e, 2.088, f_edge_statement(e, 3)},
                {"x0p_edge(3)", f, 3.991, std::sqrt(4.0 / 5.0) * std::exp((f - 1) / 2) - f},
            };
            for (const auto & x : table) {
                if (std::abs(x.value - x.reported) > 1e-3)
                    return fail(r, fmt::format("{} = {} not within 1e-3 of {}", x.name, format_real(x.value), x.reported));
                if (std::abs(x.residual) > 1e-9)
                    return fail(r, fmt::format("{} residual {}", x.name, format_real(x.residual)));
            }
            r.detail = fmt::format("x1={} x_quarter={}", format_real(a), format_real(b));
            return r;
        }

        auto classifier() -> CheckResult
        {
            CheckResult r;
            for (auto kind : {ReductionKind::Vertex, ReductionKind::Edge}) {
                SweepSpec spec;
                spec.kind = kind;
                auto result = sweep(spec);
                if (result.disagreements != 0)
                    return fail(r, fmt::format("{} sweep: {} disagreements", to_string(kind), result.disagreements));
            }
            SweepSpec graph_edges;
            graph_edges.mode = Mode::Graph;
            auto realizable = sweep(graph_edges);
            if (realizable.theorem_b2 != 0 || realizable.gap != 0)
                return fail(r, "graph-mode edge sweep left the b1 region");

            for (const auto & item : _corpus) {
                if (item.graph.vertex_count() == 0)
                    continue;
                auto s = stats(item.graph);
                if (s.k < 2)
                    continue;
                auto c = classify_edge({s.k, s.t, s.m, Mode::Graph});
                if (c.region != Region::TheoremB1 && c.region != Region::Equal)
                    return fail(r, item, "graph-derived edge parameters outside the b1 region");
            }
            r.detail = "abstract sweeps agree; graph edge parameters always in the b1 region";
            return r;
        }

        const vector<CorpusItem> & _corpus;
        const VerifyOptions & _options;
        vector<Solved> _solved;
    };
}

auto verify(const vector<CorpusItem> & corpus, const VerifyOptions & options) -> vector<CheckResult>
{
    if (corpus.empty())
        throw DomainError("no instances");
    return Verifier(corpus, options).run();
}

auto verify_json(const vector<CheckResult> & results, const RunConfig & config) -> Json
{
    Json j;
    j["tool"] = version_string();
    j["config"] = to_json(config);
    bool ok = true;
    Json checks = Json::array();
    for (const auto & r : results) {
        ok = ok && r.passed;
        Json c;
        c["name"] = r.name;
        c["passed"] = r.passed;
        c["detail"] = r.detail;
        c["reproducer"] = r.reproducer ? Json(*r.reproducer) : Json(nullptr);
        c["budget_exhausted"] = r.budget_exhausted;
        checks.push_back(std::move(c));
    }
    j["passed"] = ok;
    j["checks"] = std::move(checks);
    return j;
}

}
