#include "deltared/graph.hpp"
#include "deltared/error.hpp"

#include <algorithm>

using std::size_t;
using std::span;
using std::vector;

namespace deltared {

Graph::Graph(size_t vertex_count) :
    _adjacency(vertex_count)
{
}

Graph::Graph(size_t vertex_count, span<const Edge> edges) :
    _adjacency(vertex_count)
{
    for (const auto & e : edges)
        add_edge(e.u, e.v);
}

auto Graph::check_vertex(Vertex v) const -> void
{
    if (v >= _adjacency.size())
        throw DomainError("vertex " + std::to_string(v) + " out of range for graph on "
            + std::to_string(_adjacency.size()) + " vertices");
}

auto Graph::add_edge(Vertex a, Vertex b) -> void
{
    check_vertex(a);
    check_vertex(b);
    if (a == b)
        throw DomainError("self-loop at vertex " + std::to_string(a));

    Edge e{a, b};
    auto pos = std::lower_bound(_edges.begin(), _edges.end(), e);
    if (pos != _edges.end() && *pos == e)
        throw DomainError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    _edges.insert(pos, e);

    auto & na = _adjacency[a];
    na.insert(std::lower_bound(na.begin(), na.end(), b), b);
    auto & nb = _adjacency[b];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
}

auto Graph::neighbors(Vertex v) const -> span<const Vertex>
{
    check_vertex(v);
    return _adjacency[v];
}

auto Graph::degree(Vertex v) const -> size_t
{
    check_vertex(v);
    return _adjacency[v].size();
}

auto Graph::has_edge(Vertex a, Vertex b) const -> bool
{
    check_vertex(a);
    check_vertex(b);
    return std::binary_search(_adjacency[a].begin(), _adjacency[a].end(), b);
}

auto max_degree(const Graph & g) -> size_t
{
    size_t best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

auto max_degree_set(const Graph & g) -> vector<Vertex>
{
    if (g.vertex_count() == 0)
        throw DomainError("no vertices");

    const auto k = max_degree(g);
    vector<Vertex> result;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == k)
            result.push_back(v);
    return result;
}

auto closed_neighborhood(const Graph & g, span<const Vertex> xs) -> vector<Vertex>
{
    vector<bool> in(g.vertex_count(), false);
    for (auto v : xs) {
        auto nbrs = g.neighbors(v);
        in[v] = true;
        for (auto w : nbrs)
            in[w] = true;
    }

    vector<Vertex> result;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (in[v])
            result.push_back(v);
    return result;
}

namespace
{
    auto relabel_onto(const Graph & g, vector<Vertex> kept) -> DerivedGraph
    {
        DerivedGraph d;
        d.new_index.assign(g.vertex_count(), std::nullopt);
        for (size_t i = 0; i < kept.size(); ++i)
            d.new_index[kept[i]] = static_cast<Vertex>(i);
        d.original_index = std::move(kept);
        d.graph = Graph(d.original_index.size());
        return d;
    }
}

auto derive_gv(const Graph & g) -> DerivedGraph
{
    auto top = max_degree_set(g);
    auto d = relabel_onto(g, closed_neighborhood(g, top));
    for (const auto & e : g.edges())
        if (d.new_index[e.u] && d.new_index[e.v])
            d.graph.add_edge(*d.new_index[e.u], *d.new_index[e.v]);
    return d;
}

auto derive_ge(const Graph & g) -> DerivedGraph
{
    auto top = max_degree_set(g);
    auto d = relabel_onto(g, closed_neighborhood(g, top));

    vector<bool> is_top(g.vertex_count(), false);
    for (auto v : top)
        is_top[v] = true;

    for (const auto & e : g.edges())
        if (is_top[e.u] || is_top[e.v])
            d.graph.add_edge(*d.new_index[e.u], *d.new_index[e.v]);
    return d;
}

auto stats(const Graph & g) -> GraphStats
{
    auto top = max_degree_set(g);
    GraphStats s;
    s.k = max_degree(g);
    s.t = top.size();
    s.n = closed_neighborhood(g, top).size();

    vector<bool> is_top(g.vertex_count(), false);
    for (auto v : top)
        is_top[v] = true;
    for (const auto & e : g.edges())
        if (is_top[e.u] || is_top[e.v])
            ++s.m;
    return s;
}

auto max_degree_without(const Graph & g, span<const Vertex> removed) -> size_t
{
    vector<bool> gone(g.vertex_count(), false);
    for (auto v : removed) {
        g.degree(v);
        gone[v] = true;
    }

    size_t best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (gone[v])
            continue;
        size_t d = 0;
        for (auto w : g.neighbors(v))
            if (! gone[w])
                ++d;
        best = std::max(best, d);
    }
    return best;
}

auto max_degree_without(const Graph & g, span<const Edge> removed) -> size_t
{
    vector<size_t> deg(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        deg[v] = g.degree(v);

    vector<Edge> sorted(removed.begin(), removed.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("edge listed twice in removal set");

    for (const auto & e : sorted) {
        if (e.u >= g.vertex_count() || e.v >= g.vertex_count() || ! g.has_edge(e.u, e.v))
            throw DomainError("not an edge: " + std::to_string(e.u) + " " + std::to_string(e.v));
        --deg[e.u];
        --deg[e.v];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

}
