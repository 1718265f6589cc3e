#include "deltared/bounds.hpp"
#include "deltared/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

using std::optional;
using std::string_view;
using std::uint64_t;

namespace deltared {

auto to_string(Mode mode) -> string_view
{
    return mode == Mode::Graph ? "graph" : "abstract";
}

auto to_string(Verdict v) -> string_view
{
    switch (v) {
        case Verdict::B1Smaller: return "B1Smaller";
        case Verdict::B2Smaller: return "B2Smaller";
        case Verdict::Equal: return "Equal";
        case Verdict::B2Undefined: return "B2Undefined";
    }
    return "?";
}

auto parse_mode(string_view s) -> Mode
{
    if (s == "graph")
        return Mode::Graph;
    if (s == "abstract")
        return Mode::Abstract;
    throw DomainError("unknown mode '" + std::string(s) + "' (expected graph or abstract)");
}

auto compare_values(double b1, double b2) -> Verdict
{
    const double scale = std::max({1.0, std::abs(b1), std::abs(b2)});
    if (std::abs(b1 - b2) <= kEqualTolerance * scale)
        return Verdict::Equal;
    return b1 < b2 ? Verdict::B1Smaller : Verdict::B2Smaller;
}

auto kth_root(double r, double k) -> double
{
    if (r == 0.0 || r == 1.0)
        return r;
    return std::exp(std::log(r) / k);
}

namespace
{
    auto require(bool ok, const char * message) -> void
    {
        if (! ok)
            throw DomainError(message);
    }

    auto require_caps(uint64_t k, uint64_t t, uint64_t x) -> void
    {
        require(k <= kMaxParameter && t <= kMaxParameter && x <= kMaxParameter,
            "parameter exceeds the supported range (1e9)");
    }

    auto require_probability(double p) -> void
    {
        require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    }

    auto check_vertex_args(uint64_t k, uint64_t t, uint64_t n) -> void
    {
        require(k >= 1, "no bound for edgeless graphs (k = 0)");
        require(t >= 1, "t must be at least 1");
        require(n >= 1, "n must be at least 1");
        require_caps(k, t, n);
    }

    auto check_edge_args(uint64_t k, uint64_t t, uint64_t m) -> void
    {
        require(k >= 1, "no bound for edgeless graphs (k = 0)");
        require(t >= 1, "t must be at least 1");
        require(m >= 1, "m must be at least 1");
        require_caps(k, t, m);
    }

    auto check_vertex_radicand(uint64_t k, uint64_t t, uint64_t n) -> void
    {
        require(n <= (k + 1) * t, "n exceeds (k+1)t, so the minimiser would be negative");
    }

    auto check_edge_second(uint64_t k, uint64_t t, uint64_t m) -> void
    {
        require(k >= 2, "the edge probabilistic bound requires k >= 2");
        require(m <= k * t, "m exceeds kt");
    }

    auto vertex_root(uint64_t k, uint64_t t, uint64_t n) -> double
    {
        return kth_root(static_cast<double>(n) / (static_cast<double>(k + 1) * static_cast<double>(t)),
            static_cast<double>(k));
    }

    auto edge_root(uint64_t k, uint64_t t, uint64_t m) -> double
    {
        return kth_root(static_cast<double>(m) / (static_cast<double>(k) * static_cast<double>(t)),
            static_cast<double>(k - 1));
    }
}

auto bound_v1(uint64_t k, uint64_t t, uint64_t n) -> double
{
    check_vertex_args(k, t, n);
    return (static_cast<double>(n) + static_cast<double>(k - 1) * static_cast<double>(t))
        / (2.0 * static_cast<double>(k));
}

auto bound_v2(uint64_t k, uint64_t t, uint64_t n) -> double
{
    check_vertex_args(k, t, n);
    check_vertex_radicand(k, t, n);
    // n(1 - k/(k+1) r) written so that r = 1 gives exactly n/(k+1)
    const double r = vertex_root(k, t, n);
    const double nd = static_cast<double>(n);
    return nd * (1.0 - r) + nd * r / static_cast<double>(k + 1);
}

auto bound_v_ln(uint64_t k, uint64_t t, uint64_t n) -> double
{
    check_vertex_args(k, t, n);
    const double kp1 = static_cast<double>(k + 1);
    return (static_cast<double>(n) * std::log(kp1) + static_cast<double>(t)) / kp1;
}

auto u_vertex(double p, uint64_t k, uint64_t t, uint64_t n) -> double
{
    require_probability(p);
    return static_cast<double>(n) * p
        + static_cast<double>(t) * std::pow(1.0 - p, static_cast<double>(k + 1));
}

auto p_star_vertex(uint64_t k, uint64_t t, uint64_t n) -> double
{
    check_vertex_args(k, t, n);
    check_vertex_radicand(k, t, n);
    return 1.0 - vertex_root(k, t, n);
}

auto bound_e1(uint64_t k, uint64_t t, uint64_t m) -> double
{
    check_edge_args(k, t, m);
    return (static_cast<double>(m) + static_cast<double>(k - 1) * static_cast<double>(t))
        / (2.0 * static_cast<double>(k) - 1.0);
}

auto bound_e2(uint64_t k, uint64_t t, uint64_t m) -> double
{
    check_edge_args(k, t, m);
    check_edge_second(k, t, m);
    const double r = edge_root(k, t, m);
    const double md = static_cast<double>(m);
    return md * (1.0 - r) + md * r / static_cast<double>(k);
}

auto u_edge(double p, uint64_t k, uint64_t t, uint64_t m) -> double
{
    require_probability(p);
    return static_cast<double>(m) * p
        + static_cast<double>(t) * std::pow(1.0 - p, static_cast<double>(k));
}

auto p_star_edge(uint64_t k, uint64_t t, uint64_t m) -> double
{
    check_edge_args(k, t, m);
    check_edge_second(k, t, m);
    return 1.0 - edge_root(k, t, m);
}

auto k2_edge_identity(uint64_t t, uint64_t m) -> double
{
    require(t >= 1, "t must be at least 1");
    require(m >= t && m <= 2 * t, "identity is stated for t <= m <= 2t");
    require_caps(2, t, m);
    const double td = static_cast<double>(t);
    const double md = static_cast<double>(m);
    return (2.0 * td - md) * (3.0 * md - 2.0 * td) / (12.0 * td);
}

auto is_graph_realizable(const VertexBoundInput & in) -> bool
{
    return in.k >= 1 && in.t >= 1 && in.n >= in.t && in.n <= (in.k + 1) * in.t;
}

auto is_graph_realizable(const EdgeBoundInput & in) -> bool
{
    return in.k >= 1 && in.t >= 1 && in.m <= in.k * in.t && 2 * in.m >= in.k * in.t;
}

auto validate(const VertexBoundInput & in) -> void
{
    check_vertex_args(in.k, in.t, in.n);
    check_vertex_radicand(in.k, in.t, in.n);
    if (in.mode == Mode::Graph)
        require(in.n >= in.t, "graph mode requires n >= t");
}

auto validate(const EdgeBoundInput & in) -> void
{
    check_edge_args(in.k, in.t, in.m);
    require(in.m <= in.k * in.t, "m exceeds kt");
    if (in.mode == Mode::Graph)
        require(2 * in.m >= in.k * in.t, "graph mode requires 2m >= kt");
}

auto compare_vertex(const VertexBoundInput & in) -> BoundReport
{
    validate(in);

    BoundReport r;
    r.mode = in.mode;
    r.realizable = is_graph_realizable(in);
    r.b1 = bound_v1(in.k, in.t, in.n);
    r.b2 = bound_v2(in.k, in.t, in.n);
    r.ln_bound = bound_v_ln(in.k, in.t, in.n);
    r.p_star = p_star_vertex(in.k, in.t, in.n);
    r.u_at_pstar = u_vertex(*r.p_star, in.k, in.t, in.n);
    r.verdict = compare_values(r.b1, *r.b2);
    return r;
}

auto compare_edge(const EdgeBoundInput & in) -> BoundReport
{
    validate(in);

    BoundReport r;
    r.mode = in.mode;
    r.realizable = is_graph_realizable(in);
    r.b1 = bound_e1(in.k, in.t, in.m);
    if (in.k >= 2) {
        r.b2 = bound_e2(in.k, in.t, in.m);
        r.p_star = p_star_edge(in.k, in.t, in.m);
        r.u_at_pstar = u_edge(*r.p_star, in.k, in.t, in.m);
        r.verdict = compare_values(r.b1, *r.b2);
    }
    else
        r.verdict = Verdict::B2Undefined;
    return r;
}

}
