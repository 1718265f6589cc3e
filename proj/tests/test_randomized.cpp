#include <deltared/bounds.hpp>
#include <deltared/error.hpp>
#include <deltared/exact.hpp>
#include <deltared/randomized.hpp>
#include <deltared/rng.hpp>

#include <doctest.h>

#include <cmath>

using namespace deltared;
using doctest::Approx;

TEST_CASE("rng substreams are reproducible and distinct")
{
    auto a = Rng::substream(5, 3);
    auto b = Rng::substream(5, 3);
    auto c = Rng::substream(5, 4);
    CHECK(a.next_u64() == b.next_u64());
    CHECK(a.next_u64() != c.next_u64());
    Rng r(9);
    for (int i = 0; i < 1000; ++i) {
        auto x = r.uniform01();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(r.below(7) < 7);
    }
}

TEST_CASE("p = 0 and p = 1 give the extreme sets")
{
    auto g = gen_star_forest(3, 2);
    auto none = sample_reducing_set(g, 0.0, 1);
    CHECK(none.vertices == max_degree_set(g));
    auto every = sample_reducing_set(g, 1.0, 1);
    CHECK(every.size() == 8);
    CHECK(sample_reducing_edge_set(g, 0.0, 1).size() == 2);
    CHECK(sample_reducing_edge_set(g, 1.0, 1).size() == 6);

    // adjacent vertices of M share their fallback edge
    auto k2 = gen_path(2);
    CHECK(sample_reducing_edge_set(k2, 0.0, 1).size() == 1);
    CHECK_THROWS_AS(sample_reducing_set(g, 1.5, 1), DomainError);
}

TEST_CASE("every sampled set is reducing and never beats the optimum")
{
    for (std::uint64_t i = 0; i < 120; ++i) {
        auto rng = Rng::substream(31, i);
        auto g = gen_gnp(2 + rng.below(10), rng.uniform01(), rng.next_u64());
        if (max_degree(g) == 0)
            continue;
        CAPTURE(serialize(g));
        const double p = rng.uniform01();
        auto mv = monte_carlo(g, ReductionKind::Vertex, p, 200, i);
        auto me = monte_carlo(g, ReductionKind::Edge, p, 200, i);
        CHECK(mv.all_verified);
        CHECK(me.all_verified);
        CHECK(mv.min_size >= lambda_exact(g).value);
        CHECK(me.min_size >= lambda_e_exact(g).value);
    }
}

TEST_CASE("star forest sampling means")
{
    // k = 3, t = 4: sixteen vertices, twelve edges
    auto g = gen_star_forest(3, 4);
    const double vertex_expected = 16 * 0.3 + 4 * std::pow(0.7, 4);
    const double edge_expected = 12 * 0.3 + 4 * std::pow(0.7, 3);
    CHECK(vertex_expected == Approx(5.7604).epsilon(1e-12));
    CHECK(edge_expected == Approx(4.972).epsilon(1e-12));

    auto mv = monte_carlo(g, ReductionKind::Vertex, 0.3, 20'000, 42);
    auto me = monte_carlo(g, ReductionKind::Edge, 0.3, 20'000, 42);
    CHECK(mv.expected == Approx(vertex_expected).epsilon(1e-14));
    CHECK(me.expected == Approx(edge_expected).epsilon(1e-14));
    CHECK(std::abs(mv.empirical_mean - vertex_expected) <= 4 * mv.empirical_std / std::sqrt(20'000.0));
    CHECK(std::abs(me.empirical_mean - edge_expected) <= 4 * me.empirical_std / std::sqrt(20'000.0));
    CHECK(std::abs(mv.z_score) <= 4);
    CHECK(mv.all_verified);
    CHECK(me.all_verified);
}

TEST_CASE("vertex expectation is exact on graphs equal to their G_v")
{
    const Graph graphs[] = {gen_cycle(7), gen_complete(5), gen_star_forest(2, 3), derive_gv(gen_gnp(11, 0.3, 5)).graph};
    for (const auto & g : graphs) {
        CAPTURE(serialize(g));
        auto s = stats(g);
        auto mc = monte_carlo(g, ReductionKind::Vertex, 0.25, 10'000, 3);
        CHECK(mc.expected == Approx(u_vertex(0.25, s.k, s.t, s.n)).epsilon(1e-14));
        CHECK(std::abs(mc.z_score) <= 4);
    }
}

TEST_CASE("edge expectation is an upper bound when fallback edges can be shared")
{
    auto g = gen_complete(6);
    auto s = stats(g);
    auto mc = monte_carlo(g, ReductionKind::Edge, 0.1, 10'000, 8);
    CHECK(mc.empirical_mean <= mc.expected);
    CHECK(mc.expected == Approx(u_edge(0.1, s.k, s.t, s.m)).epsilon(1e-14));
}

TEST_CASE("monte carlo reporting")
{
    auto g = gen_star_forest(2, 3);
    auto one = monte_carlo(g, ReductionKind::Vertex, 0.5, 1, 7);
    CHECK_FALSE(one.std_defined);
    CHECK(one.empirical_std == 0.0);
    CHECK(one.min_size == one.max_size);
    CHECK(one.empirical_mean == double(one.min_size));

    auto zero = monte_carlo(g, ReductionKind::Vertex, 0.0, 50, 7);
    CHECK(zero.empirical_mean == 3.0);
    CHECK(zero.empirical_std == 0.0);
    CHECK(zero.z_score == 0.0);

    auto a = monte_carlo(g, ReductionKind::Edge, 0.4, 500, 11);
    auto b = monte_carlo(g, ReductionKind::Edge, 0.4, 500, 11);
    CHECK(a.empirical_mean == b.empirical_mean);
    CHECK(a.empirical_std == b.empirical_std);
    CHECK_THROWS_AS(monte_carlo(g, ReductionKind::Edge, 0.4, 0, 11), DomainError);
}

TEST_CASE("the expected size is smallest near p*")
{
    // 5-cycle: p* = 1 - 3^(-1/2); the best point on a 0.1 grid is its neighbour 0.4
    auto g = gen_cycle(5);
    double best_p = 0.0, best = 1e9;
    for (int i = 0; i <= 10; ++i) {
        auto mc = monte_carlo(g, ReductionKind::Vertex, i / 10.0, 4000, 100 + i);
        if (mc.expected < best) {
            best = mc.expected;
            best_p = i / 10.0;
        }
    }
    CHECK(std::abs(best_p - p_star_vertex(2, 5, 5)) <= 0.1);
    CHECK(best >= bound_v2(2, 5, 5) - 1e-12);
}
