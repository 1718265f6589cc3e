#pragma once

#include "deltared/graph.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace deltared {

enum class ReductionKind
{
    Vertex,
    Edge
};

auto to_string(ReductionKind) -> std::string_view;

/// A removal set together with the outcome of checking it against the graph.
/// Only the container matching `kind` is populated.
struct ReductionCertificate
{
    ReductionKind kind = ReductionKind::Vertex;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::size_t resulting_max_degree = 0;
    bool verified = false;

    auto size() const noexcept -> std::size_t
    {
        return kind == ReductionKind::Vertex ? vertices.size() : edges.size();
    }
};

/// Δ(G - R) < Δ(G), or R = V(G).
auto is_reducing_set(const Graph & g, std::span<const Vertex> removed) -> bool;

/// Δ(G - L) < Δ(G), or L = E(G) = ∅.
auto is_reducing_edge_set(const Graph & g, std::span<const Edge> removed) -> bool;

/// Sorts and deduplicates `removed`, then records the check result.
auto make_vertex_certificate(const Graph & g, std::vector<Vertex> removed) -> ReductionCertificate;
auto make_edge_certificate(const Graph & g, std::vector<Edge> removed) -> ReductionCertificate;

enum class SearchStatus
{
    Optimal,
    Inconclusive
};

enum class SearchStrategy
{
    /// Lexicographic subsets of the candidate pool with feasibility pruning.
    BranchAndBound,
    /// Every subset of V(G) (resp. E(G)) by increasing size, each tested
    /// against the definition. Independent of the G_v / G_e reduction.
    Exhaustive
};

/// Budget unit: candidate sets examined.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct ExactResult
{
    SearchStatus status = SearchStatus::Optimal;
    /// The optimum when Optimal, otherwise the best known upper bound.
    std::size_t value = 0;
    /// Every size below this was shown infeasible.
    std::size_t lower_bound = 0;
    ReductionCertificate certificate;
    std::uint64_t sets_examined = 0;
};

/// λ(G). Among optimal sets the lexicographically smallest is returned.
/// Throws DomainError on the graph with no vertices.
auto lambda_exact(const Graph & g, std::uint64_t budget = kDefaultBudget,
    SearchStrategy strategy = SearchStrategy::BranchAndBound) -> ExactResult;

/// λ_e(G), same conventions as lambda_exact.
auto lambda_e_exact(const Graph & g, std::uint64_t budget = kDefaultBudget,
    SearchStrategy strategy = SearchStrategy::BranchAndBound) -> ExactResult;

}
