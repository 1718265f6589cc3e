#include "deltared/error.hpp"
#include "deltared/graph.hpp"
#include "deltared/rng.hpp"

#include <cmath>

using std::size_t;

namespace deltared {

auto gen_star_forest(size_t k, size_t t) -> Graph
{
    if (k == 0 || t == 0)
        throw DomainError("star forest needs k >= 1 and t >= 1");

    Graph g((k + 1) * t);
    for (size_t s = 0; s < t; ++s) {
        auto centre = static_cast<Vertex>(s * (k + 1));
        for (size_t leaf = 1; leaf <= k; ++leaf)
            g.add_edge(centre, static_cast<Vertex>(centre + leaf));
    }
    return g;
}

auto gen_cycle(size_t n) -> Graph
{
    if (n < 3)
        throw DomainError("cycle needs at least 3 vertices");

    Graph g(n);
    for (size_t i = 0; i < n; ++i)
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return g;
}

auto gen_path(size_t n) -> Graph
{
    if (n == 0)
        throw DomainError("path needs at least 1 vertex");

    Graph g(n);
    for (size_t i = 0; i + 1 < n; ++i)
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return g;
}

auto gen_complete(size_t n) -> Graph
{
    Graph g(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return g;
}

auto gen_gnp(size_t n, double p, std::uint64_t seed) -> Graph
{
    if (! (p >= 0.0 && p <= 1.0))
        throw DomainError("edge probability must lie in [0, 1]");

    Rng rng(seed);
    Graph g(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (rng.uniform01() < p)
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return g;
}

}
