#include "deltared/randomized.hpp"
#include "deltared/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

using std::size_t;
using std::uint64_t;
using std::vector;
__extension__ typedef unsigned __int128 u128;

namespace deltared {

namespace
{
    auto require_probability(double p) -> void
    {
        if (! (p >= 0.0 && p <= 1.0))
            throw DomainError("p must lie in [0, 1]");
    }

    struct VertexSampler
    {
        explicit VertexSampler(const Graph & g) :
            top(max_degree_set(g)),
            pool(closed_neighborhood(g, top))
        {
            for (auto v : top) {
                auto nbrs = g.neighbors(v);
                vector<Vertex> closed(nbrs.begin(), nbrs.end());
                closed.push_back(v);
                neighbourhoods.push_back(std::move(closed));
            }
        }

        auto draw(double p, Rng & rng, vector<bool> & in_sample) const -> vector<Vertex>
        {
            std::fill(in_sample.begin(), in_sample.end(), false);
            vector<Vertex> picked;
            for (auto w : pool)
                if (rng.uniform01() < p) {
                    in_sample[w] = true;
                    picked.push_back(w);
                }
            for (size_t i = 0; i < top.size(); ++i) {
                bool touched = std::any_of(neighbourhoods[i].begin(), neighbourhoods[i].end(),
                    [&](Vertex w) { return in_sample[w]; });
                if (! touched)
                    picked.push_back(top[i]);
            }
            return picked;
        }

        vector<Vertex> top;
        vector<Vertex> pool;
        vector<vector<Vertex>> neighbourhoods;
    };

    struct EdgeSampler
    {
        explicit EdgeSampler(const Graph & g) :
            top(max_degree_set(g))
        {
            vector<bool> is_top(g.vertex_count(), false);
            for (auto v : top)
                is_top[v] = true;
            for (const auto & e : g.edges())
                if (is_top[e.u] || is_top[e.v])
                    pool.push_back(e);
            for (auto v : top) {
                auto nbrs = g.neighbors(v);
                if (nbrs.empty())
                    throw DomainError("edge construction needs k >= 1");
                // the smallest neighbour gives the lexicographically smallest incident edge
                smallest.emplace_back(v, nbrs.front());
            }
        }

        auto draw(double p, Rng & rng, vector<bool> & touched) const -> vector<Edge>
        {
            std::fill(touched.begin(), touched.end(), false);
            vector<Edge> picked;
            for (const auto & e : pool)
                if (rng.uniform01() < p) {
                    touched[e.u] = touched[e.v] = true;
                    picked.push_back(e);
                }
            for (size_t i = 0; i < top.size(); ++i)
                if (! touched[top[i]]) {
                    // the fallback edge may also serve an adjacent vertex of M
                    touched[smallest[i].u] = touched[smallest[i].v] = true;
                    picked.push_back(smallest[i]);
                }
            return picked;
        }

        vector<Vertex> top;
        vector<Edge> pool;
        vector<Edge> smallest;
    };
}

auto sample_reducing_set(const Graph & g, double p, Rng & rng) -> ReductionCertificate
{
    require_probability(p);
    VertexSampler sampler(g);
    vector<bool> scratch(g.vertex_count());
    return make_vertex_certificate(g, sampler.draw(p, rng, scratch));
}

auto sample_reducing_set(const Graph & g, double p, uint64_t seed) -> ReductionCertificate
{
    Rng rng(seed);
    return sample_reducing_set(g, p, rng);
}

auto sample_reducing_edge_set(const Graph & g, double p, Rng & rng) -> ReductionCertificate
{
    require_probability(p);
    EdgeSampler sampler(g);
    vector<bool> scratch(g.vertex_count());
    return make_edge_certificate(g, sampler.draw(p, rng, scratch));
}

auto sample_reducing_edge_set(const Graph & g, double p, uint64_t seed) -> ReductionCertificate
{
    Rng rng(seed);
    return sample_reducing_edge_set(g, p, rng);
}

auto monte_carlo(const Graph & g, ReductionKind kind, double p, uint64_t trials, uint64_t seed)
    -> MonteCarloReport
{
    require_probability(p);
    if (trials == 0)
        throw DomainError("need at least one trial");

    MonteCarloReport report;
    report.kind = kind;
    report.trials = trials;
    report.seed = seed;
    report.p = p;
    report.min_size = std::numeric_limits<size_t>::max();

    const auto s = stats(g);
    const double q = 1.0 - p;
    if (kind == ReductionKind::Vertex)
        report.expected = static_cast<double>(s.n) * p + static_cast<double>(s.t) * std::pow(q, static_cast<double>(s.k + 1));
    else
        report.expected = static_cast<double>(s.m) * p + static_cast<double>(s.t) * std::pow(q, static_cast<double>(s.k));

    // exact integer sums keep the aggregate independent of trial order
    u128 sum = 0, sum_sq = 0;
    vector<bool> scratch(g.vertex_count());

    auto record = [&](size_t size, bool ok) {
        sum += size;
        sum_sq += static_cast<u128>(size) * size;
        report.min_size = std::min(report.min_size, size);
        report.max_size = std::max(report.max_size, size);
        report.all_verified = report.all_verified && ok;
    };

    if (kind == ReductionKind::Vertex) {
        VertexSampler sampler(g);
        for (uint64_t i = 0; i < trials; ++i) {
            auto rng = Rng::substream(seed, i);
            auto r = sampler.draw(p, rng, scratch);
            record(r.size(), is_reducing_set(g, r));
        }
    }
    else {
        EdgeSampler sampler(g);
        for (uint64_t i = 0; i < trials; ++i) {
            auto rng = Rng::substream(seed, i);
            auto l = sampler.draw(p, rng, scratch);
            record(l.size(), is_reducing_edge_set(g, l));
        }
    }

    const double nt = static_cast<double>(trials);
    report.empirical_mean = static_cast<double>(sum) / nt;
    if (trials > 1) {
        // n·Σx² - (Σx)² is exact in integers
        const auto spread = static_cast<u128>(trials) * sum_sq - sum * sum;
        report.empirical_std = std::sqrt(static_cast<double>(spread) / (nt * (nt - 1.0)));
        report.std_defined = true;
    }

    const double diff = report.empirical_mean - report.expected;
    if (report.empirical_std > 0.0)
        report.z_score = diff / (report.empirical_std / std::sqrt(nt));
    else if (std::abs(diff) <= 1e-12 * std::max(1.0, std::abs(report.expected)))
        report.z_score = 0.0;
    else
        report.z_score = diff > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    return report;
}

}
