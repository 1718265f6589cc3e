#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deltared {

using Vertex = std::uint32_t;

/// Unordered pair stored canonically with `u < v`.
struct Edge
{
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge &) const = default;
    auto contains(Vertex w) const noexcept -> bool { return u == w || v == w; }
};

/// Simple undirected graph on vertices 0..vertex_count-1.
///
/// Edges are kept in canonical lexicographic order (min endpoint, then max
/// endpoint); adjacency lists are sorted. Self-loops, repeated edges and
/// out-of-range endpoints are rejected with DomainError.
class Graph
{
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);
    Graph(std::size_t vertex_count, std::span<const Edge> edges);

    auto add_edge(Vertex a, Vertex b) -> void;

    auto vertex_count() const noexcept -> std::size_t { return _adjacency.size(); }
    auto edge_count() const noexcept -> std::size_t { return _edges.size(); }
    auto edges() const noexcept -> std::span<const Edge> { return _edges; }
    auto neighbors(Vertex v) const -> std::span<const Vertex>;
    auto degree(Vertex v) const -> std::size_t;
    auto has_edge(Vertex a, Vertex b) const -> bool;

    auto operator==(const Graph &) const -> bool = default;

private:
    auto check_vertex(Vertex v) const -> void;

    std::vector<std::vector<Vertex>> _adjacency;
    std::vector<Edge> _edges;
};

/// (k, t, n, m) = (Δ(G), |M(G)|, |V(G_v)|, |E(G_e)|).
struct GraphStats
{
    std::uint64_t k = 0;
    std::uint64_t t = 0;
    std::uint64_t n = 0;
    std::uint64_t m = 0;

    auto operator==(const GraphStats &) const -> bool = default;
};

/// A subgraph together with the correspondence to the graph it came from.
struct DerivedGraph
{
    Graph graph;
    /// new index -> index in the source graph, increasing.
    std::vector<Vertex> original_index;
    /// source index -> new index, empty for vertices that were dropped.
    std::vector<std::optional<Vertex>> new_index;
};

/// Largest degree; 0 for the graph with no vertices.
auto max_degree(const Graph & g) -> std::size_t;

/// M(G) in increasing order. Throws DomainError("no vertices") on the empty graph.
auto max_degree_set(const Graph & g) -> std::vector<Vertex>;

/// Union of N[v] over v in `xs`, sorted.
auto closed_neighborhood(const Graph & g, std::span<const Vertex> xs) -> std::vector<Vertex>;

/// G_v: the subgraph induced by N[M(G)].
auto derive_gv(const Graph & g) -> DerivedGraph;

/// G_e: vertex set N[M(G)], edge set the edges incident to M(G).
auto derive_ge(const Graph & g) -> DerivedGraph;

auto stats(const Graph & g) -> GraphStats;

/// Maximum degree after deleting the vertices in `removed`.
auto max_degree_without(const Graph & g, std::span<const Vertex> removed) -> std::size_t;

/// Maximum degree after deleting the edges in `removed` (every one must be an edge of g).
auto max_degree_without(const Graph & g, std::span<const Edge> removed) -> std::size_t;

// generators

/// t disjoint copies of K_{1,k}; star i has centre i*(k+1) followed by its leaves.
auto gen_star_forest(std::size_t k, std::size_t t) -> Graph;
auto gen_cycle(std::size_t n) -> Graph;
auto gen_path(std::size_t n) -> Graph;
auto gen_complete(std::size_t n) -> Graph;

/// Erdős–Rényi G(n, p). Pairs (i, j), i < j, are visited in lexicographic
/// order and each is kept when the next Rng::uniform01() draw is below p.
auto gen_gnp(std::size_t n, double p, std::uint64_t seed) -> Graph;

// edge-list text format

/// Header line with the vertex count, then one "u v" pair per line. Lines
/// whose first non-blank character is '#' and blank lines are ignored.
auto parse_edge_list(std::string_view text) -> Graph;

/// Canonical serialisation: header, then edges in canonical order, '\n' terminated.
auto serialize(const Graph & g) -> std::string;

}
