#pragma once

#include "deltared/exact.hpp"
#include "deltared/graph.hpp"
#include "deltared/rng.hpp"

#include <cstdint>

namespace deltared {

/// Random Δ-reducing set: keep each vertex of N[M(G)] with probability p,
/// then add every max-degree vertex whose closed neighbourhood missed the
/// sample. Mean size n·p + t·(1-p)^(k+1).
auto sample_reducing_set(const Graph & g, double p, Rng & rng) -> ReductionCertificate;
auto sample_reducing_set(const Graph & g, double p, std::uint64_t seed) -> ReductionCertificate;

/// Random Δ-reducing edge set: keep each edge at a max-degree vertex with
/// probability p, then for every max-degree vertex left untouched add its
/// lexicographically smallest incident edge. Mean size at most
/// m·p + t·(1-p)^k, with equality when no two max-degree vertices are adjacent.
auto sample_reducing_edge_set(const Graph & g, double p, Rng & rng) -> ReductionCertificate;
auto sample_reducing_edge_set(const Graph & g, double p, std::uint64_t seed) -> ReductionCertificate;

struct MonteCarloReport
{
    ReductionKind kind = ReductionKind::Vertex;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double p = 0.0;
    double empirical_mean = 0.0;
    /// Sample standard deviation (n - 1 denominator); 0 when trials == 1.
    double empirical_std = 0.0;
    bool std_defined = false;
    /// n·p + t·(1-p)^(k+1) or m·p + t·(1-p)^k.
    double expected = 0.0;
    /// (mean - expected) / (std / sqrt(trials)); 0 when std is 0 and mean == expected.
    double z_score = 0.0;
    std::size_t min_size = 0;
    std::size_t max_size = 0;
    /// Every sampled set passed the Δ-reducing check.
    bool all_verified = true;
};

/// Trial i draws from Rng::substream(seed, i), so results do not depend on
/// trial order. Sums are accumulated in integers.
auto monte_carlo(const Graph & g, ReductionKind kind, double p, std::uint64_t trials,
    std::uint64_t seed) -> MonteCarloReport;

}
