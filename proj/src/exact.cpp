#include "deltared/exact.hpp"
#include "deltared/error.hpp"

#include <algorithm>
#include <numeric>

using std::size_t;
using std::span;
using std::uint64_t;
using std::vector;

namespace deltared {

auto to_string(ReductionKind kind) -> std::string_view
{
    return kind == ReductionKind::Vertex ? "vertex" : "edge";
}

auto is_reducing_set(const Graph & g, span<const Vertex> removed) -> bool
{
    vector<bool> gone(g.vertex_count(), false);
    size_t distinct = 0;
    for (auto v : removed) {
        if (v >= g.vertex_count())
            throw DomainError("vertex " + std::to_string(v) + " out of range");
        if (! gone[v]) {
            gone[v] = true;
            ++distinct;
        }
    }
    if (distinct == g.vertex_count())
        return true;
    return max_degree_without(g, removed) < max_degree(g);
}

auto is_reducing_edge_set(const Graph & g, span<const Edge> removed) -> bool
{
    const auto remaining = max_degree_without(g, removed);
    if (removed.empty() && g.edge_count() == 0)
        return true;
    return remaining < max_degree(g);
}

auto make_vertex_certificate(const Graph & g, vector<Vertex> removed) -> ReductionCertificate
{
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());

    ReductionCertificate c;
    c.kind = ReductionKind::Vertex;
    c.verified = is_reducing_set(g, removed);
    c.resulting_max_degree = max_degree_without(g, removed);
    c.vertices = std::move(removed);
    return c;
}

auto make_edge_certificate(const Graph & g, vector<Edge> removed) -> ReductionCertificate
{
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());

    ReductionCertificate c;
    c.kind = ReductionKind::Edge;
    c.verified = is_reducing_edge_set(g, removed);
    c.resulting_max_degree = max_degree_without(g, removed);
    c.edges = std::move(removed);
    return c;
}

namespace
{
    // Every max-degree vertex ("target") must be hit by a chosen candidate:
    // a vertex of its closed neighbourhood, or one of its incident edges.
    struct HittingProblem
    {
        size_t target_count = 0;
        vector<vector<size_t>> hits;
        vector<size_t> last_candidate;
        size_t max_hits = 0;
    };

    auto finish_problem(HittingProblem & p) -> void
    {
        p.last_candidate.assign(p.target_count, 0);
        for (size_t c = 0; c < p.hits.size(); ++c) {
            p.max_hits = std::max(p.max_hits, p.hits[c].size());
            for (auto target : p.hits[c])
                p.last_candidate[target] = std::max(p.last_candidate[target], c);
        }
    }

    class BranchAndBound
    {
    public:
        BranchAndBound(const HittingProblem & problem, uint64_t budget) :
            _p(problem),
            _budget(budget),
            _hit_count(problem.target_count, 0)
        {
        }

        /// Lexicographically first hitting set of exactly `size` candidates.
        auto search(size_t size) -> bool
        {
            _size = size;
            _chosen.clear();
            _unhit = _p.target_count;
            std::fill(_hit_count.begin(), _hit_count.end(), 0);
            return descend(0);
        }

        auto exhausted() const -> bool { return _exhausted; }
        auto examined() const -> uint64_t { return _examined; }
        auto chosen() const -> const vector<size_t> & { return _chosen; }

    private:
        auto descend(size_t next) -> bool
        {
            if (_examined == _budget) {
                _exhausted = true;
                return false;
            }
            ++_examined;
            if (_unhit == 0)
                return true;

            const size_t slots = _size - _chosen.size();
            if (slots == 0 || _unhit > slots * _p.max_hits)
                return false;
            for (size_t target = 0; target < _p.target_count; ++target)
                if (_hit_count[target] == 0 && _p.last_candidate[target] < next)
                    return false;

            const size_t candidates = _p.hits.size();
            for (size_t c = next; c + slots <= candidates; ++c) {
                choose(c);
                if (descend(c + 1))
                    return true;
                unchoose(c);
                if (_exhausted)
                    return false;
            }
            return false;
        }

        auto choose(size_t c) -> void
        {
            _chosen.push_back(c);
            for (auto target : _p.hits[c])
                if (_hit_count[target]++ == 0)
                    --_unhit;
        }

        auto unchoose(size_t c) -> void
        {
            _chosen.pop_back();
            for (auto target : _p.hits[c])
                if (--_hit_count[target] == 0)
                    ++_unhit;
        }

        const HittingProblem & _p;
        uint64_t _budget;
        uint64_t _examined = 0;
        bool _exhausted = false;
        size_t _size = 0;
        size_t _unhit = 0;
        vector<size_t> _hit_count;
        vector<size_t> _chosen;
    };

    // Advances `idx` to the next size-|idx| combination of {0..n-1} in
    // lexicographic order; false after the last one.
    auto next_combination(vector<size_t> & idx, size_t n) -> bool
    {
        const size_t r = idx.size();
        for (size_t i = r; i-- > 0;) {
            if (idx[i] < n - r + i) {
                ++idx[i];
                for (size_t j = i + 1; j < r; ++j)
                    idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    }

    // Plain enumeration: sizes 0, 1, ... over `pool`, each subset checked by `accepts`.
    template <typename Item, typename Accepts>
    auto enumerate_exhaustively(const vector<Item> & pool, uint64_t budget, Accepts accepts,
        ExactResult & result) -> std::optional<vector<Item>>
    {
        const size_t n = pool.size();
        vector<Item> subset;
        for (size_t size = 0; size <= n; ++size) {
            result.lower_bound = size;
            vector<size_t> idx(size);
            std::iota(idx.begin(), idx.end(), size_t{0});
            do {
                if (result.sets_examined == budget)
                    return std::nullopt;
                ++result.sets_examined;
                subset.clear();
                for (auto i : idx)
                    subset.push_back(pool[i]);
                if (accepts(subset))
                    return subset;
            } while (size > 0 && next_combination(idx, n));
        }
        return std::nullopt;
    }

    auto vertex_problem(const Graph & g, const vector<Vertex> & top, const vector<Vertex> & pool) -> HittingProblem
    {
        HittingProblem p;
        p.target_count = top.size();
        vector<std::optional<size_t>> target_of(g.vertex_count());
        for (size_t i = 0; i < top.size(); ++i)
            target_of[top[i]] = i;

        p.hits.resize(pool.size());
        for (size_t c = 0; c < pool.size(); ++c) {
            auto w = pool[c];
            if (target_of[w])
                p.hits[c].push_back(*target_of[w]);
            for (auto x : g.neighbors(w))
                if (target_of[x])
                    p.hits[c].push_back(*target_of[x]);
        }
        finish_problem(p);
        return p;
    }

    auto edge_problem(const Graph & g, const vector<Vertex> & top, const vector<Edge> & pool) -> HittingProblem
    {
        HittingProblem p;
        p.target_count = top.size();
        vector<std::optional<size_t>> target_of(g.vertex_count());
        for (size_t i = 0; i < top.size(); ++i)
            target_of[top[i]] = i;

        p.hits.resize(pool.size());
        for (size_t c = 0; c < pool.size(); ++c) {
            if (target_of[pool[c].u])
                p.hits[c].push_back(*target_of[pool[c].u]);
            if (target_of[pool[c].v])
                p.hits[c].push_back(*target_of[pool[c].v]);
        }
        finish_problem(p);
        return p;
    }

    auto incident_to(const vector<Vertex> & top, const Graph & g) -> vector<Edge>
    {
        vector<bool> is_top(g.vertex_count(), false);
        for (auto v : top)
            is_top[v] = true;
        vector<Edge> result;
        for (const auto & e : g.edges())
            if (is_top[e.u] || is_top[e.v])
                result.push_back(e);
        return result;
    }

    // One incident edge (the smallest) per max-degree vertex.
    auto fallback_edge_set(const Graph & g, const vector<Vertex> & top) -> vector<Edge>
    {
        vector<Edge> result;
        for (auto v : top) {
            Edge best{v, g.neighbors(v).front()};
            for (auto w : g.neighbors(v))
                best = std::min(best, Edge{v, w});
            result.push_back(best);
        }
        return result;
    }

    template <typename Item>
    auto run_branch_and_bound(const HittingProblem & problem, const vector<Item> & pool, uint64_t budget,
        ExactResult & result) -> std::optional<vector<Item>>
    {
        BranchAndBound search(problem, budget);
        for (size_t size = 0; size <= pool.size(); ++size) {
            result.lower_bound = size;
            bool found = search.search(size);
            result.sets_examined = search.examined();
            if (search.exhausted())
                return std::nullopt;
            if (found) {
                vector<Item> picked;
                for (auto c : search.chosen())
                    picked.push_back(pool[c]);
                return picked;
            }
        }
        return std::nullopt;
    }
}

auto lambda_exact(const Graph & g, uint64_t budget, SearchStrategy strategy) -> ExactResult
{
    auto top = max_degree_set(g);
    ExactResult result;

    std::optional<vector<Vertex>> found;
    if (strategy == SearchStrategy::Exhaustive) {
        vector<Vertex> everything(g.vertex_count());
        std::iota(everything.begin(), everything.end(), Vertex{0});
        found = enumerate_exhaustively(everything, budget,
            [&](const vector<Vertex> & r) { return is_reducing_set(g, r); }, result);
    }
    else if (g.edge_count() == 0) {
        vector<Vertex> everything(g.vertex_count());
        std::iota(everything.begin(), everything.end(), Vertex{0});
        found = std::move(everything);
        result.sets_examined = 1;
    }
    else {
        auto gv = derive_gv(g);
        auto problem = vertex_problem(g, top, gv.original_index);
        found = run_branch_and_bound(problem, gv.original_index, budget, result);
    }

    if (found) {
        result.status = SearchStatus::Optimal;
        result.certificate = make_vertex_certificate(g, std::move(*found));
        result.value = result.certificate.size();
        result.lower_bound = result.value;
    }
    else {
        // M(G) always works when k >= 1; otherwise only V(G) does.
        vector<Vertex> fallback = top;
        if (g.edge_count() == 0) {
            fallback.resize(g.vertex_count());
            std::iota(fallback.begin(), fallback.end(), Vertex{0});
        }
        result.status = SearchStatus::Inconclusive;
        result.certificate = make_vertex_certificate(g, std::move(fallback));
        result.value = result.certificate.size();
    }
    return result;
}

auto lambda_e_exact(const Graph & g, uint64_t budget, SearchStrategy strategy) -> ExactResult
{
    auto top = max_degree_set(g);
    ExactResult result;

    std::optional<vector<Edge>> found;
    if (strategy == SearchStrategy::Exhaustive) {
        vector<Edge> everything(g.edges().begin(), g.edges().end());
        found = enumerate_exhaustively(everything, budget,
            [&](const vector<Edge> & l) { return is_reducing_edge_set(g, l); }, result);
    }
    else if (g.edge_count() == 0) {
        found = vector<Edge>{};
        result.sets_examined = 1;
    }
    else {
        auto pool = incident_to(top, g);
        auto problem = edge_problem(g, top, pool);
        found = run_branch_and_bound(problem, pool, budget, result);
    }

    if (found) {
        result.status = SearchStatus::Optimal;
        result.certificate = make_edge_certificate(g, std::move(*found));
        result.value = result.certificate.size();
        result.lower_bound = result.value;
    }
    else {
        result.status = SearchStatus::Inconclusive;
        result.certificate = make_edge_certificate(g,
            g.edge_count() == 0 ? vector<Edge>{} : fallback_edge_set(g, top));
        result.value = result.certificate.size();
    }
    return result;
}

}
