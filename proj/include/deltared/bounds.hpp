#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string_view>

namespace deltared {

/// Graph mode enforces the relations a real graph must satisfy
/// (t <= n <= (k+1)t; kt/2 <= m <= kt). Abstract mode treats the triple as
/// free parameters and only keeps what the formulas themselves need.
enum class Mode
{
    Graph,
    Abstract
};

enum class Verdict
{
    B1Smaller,
    B2Smaller,
    Equal,
    B2Undefined
};

auto to_string(Mode) -> std::string_view;
auto to_string(Verdict) -> std::string_view;
auto parse_mode(std::string_view) -> Mode;

struct VertexBoundInput
{
    std::uint64_t k = 0;
    std::uint64_t t = 0;
    std::uint64_t n = 0;
    Mode mode = Mode::Graph;
};

struct EdgeBoundInput
{
    std::uint64_t k = 0;
    std::uint64_t t = 0;
    std::uint64_t m = 0;
    Mode mode = Mode::Graph;
};

/// Both bounds for one parameter triple, plus the probabilistic bound
/// u(p) at its minimiser.
struct BoundReport
{
    Mode mode = Mode::Graph;
    /// Whether the triple satisfies the graph-mode relations.
    bool realizable = true;
    double b1 = 0.0;
    std::optional<double> b2;
    /// Vertex reports only.
    std::optional<double> ln_bound;
    std::optional<double> u_at_pstar;
    std::optional<double> p_star;
    Verdict verdict = Verdict::B2Undefined;
};

/// Relative tolerance used for "Equal" verdicts: |b1 - b2| <= kEqualTolerance * max(1, |b1|, |b2|).
inline constexpr double kEqualTolerance = 1e-12;

/// Largest parameter value accepted; keeps every bound well below 1e9·(k+1).
inline constexpr std::uint64_t kMaxParameter = 1'000'000'000;

/// Sign of b1 - b2 with the tolerance above.
auto compare_values(double b1, double b2) -> Verdict;

/// r^(1/k) as exp(log(r)/k), exact at r = 0 and r = 1.
auto kth_root(double r, double k) -> double;

// vertex side

auto bound_v1(std::uint64_t k, std::uint64_t t, std::uint64_t n) -> double;
auto bound_v2(std::uint64_t k, std::uint64_t t, std::uint64_t n) -> double;
auto bound_v_ln(std::uint64_t k, std::uint64_t t, std::uint64_t n) -> double;

/// n·p + t·(1-p)^(k+1).
auto u_vertex(double p, std::uint64_t k, std::uint64_t t, std::uint64_t n) -> double;
/// 1 - (n/((k+1)t))^(1/k).
auto p_star_vertex(std::uint64_t k, std::uint64_t t, std::uint64_t n) -> double;

// edge side

auto bound_e1(std::uint64_t k, std::uint64_t t, std::uint64_t m) -> double;
auto bound_e2(std::uint64_t k, std::uint64_t t, std::uint64_t m) -> double;

/// m·p + t·(1-p)^k.
auto u_edge(double p, std::uint64_t k, std::uint64_t t, std::uint64_t m) -> double;
/// 1 - (m/(kt))^(1/(k-1)).
auto p_star_edge(std::uint64_t k, std::uint64_t t, std::uint64_t m) -> double;

/// (2t - m)(3m - 2t) / (12t), the closed form of b2 - b1 on the edge side when k = 2.
auto k2_edge_identity(std::uint64_t t, std::uint64_t m) -> double;

/// Throws DomainError when the input violates its mode's constraints.
auto validate(const VertexBoundInput &) -> void;
auto validate(const EdgeBoundInput &) -> void;

auto is_graph_realizable(const VertexBoundInput &) -> bool;
auto is_graph_realizable(const EdgeBoundInput &) -> bool;

auto compare_vertex(const VertexBoundInput &) -> BoundReport;
auto compare_edge(const EdgeBoundInput &) -> BoundReport;

// Exact rational evaluation, for integer inputs where the bound is rational.

using Rational = boost::rational<std::int64_t>;

auto exact_bound_v1(std::uint64_t k, std::uint64_t t, std::uint64_t n) -> Rational;
auto exact_bound_e1(std::uint64_t k, std::uint64_t t, std::uint64_t m) -> Rational;

/// Empty when (n/((k+1)t))^(1/k) is irrational.
auto exact_bound_v2(std::uint64_t k, std::uint64_t t, std::uint64_t n) -> std::optional<Rational>;

/// Empty when (m/(kt))^(1/(k-1)) is irrational. Always defined for k = 2.
auto exact_bound_e2(std::uint64_t k, std::uint64_t t, std::uint64_t m) -> std::optional<Rational>;

auto exact_k2_edge_identity(std::uint64_t t, std::uint64_t m) -> Rational;

/// The r with r^k == q, when q >= 0 has a rational k-th root.
auto exact_kth_root(const Rational & q, std::uint64_t k) -> std::optional<Rational>;

}
