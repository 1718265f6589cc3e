#pragma once

#include "deltared/bounds.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace deltared {

// Lemma functions

/// (1 + 1/x)^(x+1), decreasing towards e. Requires x > 0.
auto f_limit(double x) -> double;

/// c·e^((x-1)/2) / x for 0 < c <= 1, x >= 1. Minimised at x = 2.
auto f_c(double c, double x) -> double;

/// ((2y-1)/(2y-x))^(y-1/2) - x on y >= 3, 1 <= x < 2y.
auto f_edge(double x, double y) -> double;

/// ((2y)/(2y+1-x))^y - x on y >= 2, 1 <= x < 2y+1.
auto f_vertex(double x, double y) -> double;

/// ((2y-1)/(2y-x))^y - x: the edge crossover equation with integer exponent.
auto f_edge_statement(double x, double y) -> double;

// Roots

/// Bisection on [lo, hi] where fn(lo) and fn(hi) differ in sign, stopping
/// once the bracket is narrower than `width`. Throws DomainError without a
/// sign change.
auto bisect(const std::function<double(double)> & fn, double lo, double hi, double width = 1e-13) -> double;

/// The root x_c > 2 of f_c(c, x) = 1.
auto solve_x_c(double c) -> double;

/// x_1 = solve_x_c(1), the root of e^((x-1)/2) = x above 1.
auto x1() -> double;

/// x_{1/4} = solve_x_c(1/4).
auto x_quarter() -> double;

enum class X0Variant
{
    /// ((2k-1)/(2k-x))^k = x
    Statement,
    /// ((2k-1)/(2k-x))^(k-1/2) = x
    Proof
};

auto to_string(X0Variant) -> std::string_view;

/// Root in (1, x_1) of the chosen edge equation. Requires k >= 3.
auto solve_x0_edge(double k, X0Variant variant = X0Variant::Statement) -> double;

/// solve_x_c(sqrt((2k-2)/(2k-1))). Requires k >= 3.
auto solve_x0p_edge(double k) -> double;

/// Root in (1, x_1) of ((2k)/(2k+1-x))^k = x. Requires k >= 2.
auto solve_x0_vertex(double k) -> double;

/// solve_x_c(((k+4)/(2k+4))^2). Requires k >= 2.
auto solve_x0p_vertex(double k) -> double;

struct CrossoverConstants
{
    double x1 = 0.0;
    double x_quarter = 0.0;
    std::uint64_t k = 0;
    std::optional<double> x0_edge_statement;
    std::optional<double> x0_edge_proof;
    std::optional<double> x0p_edge;
    std::optional<double> x0_vertex;
    std::optional<double> x0p_vertex;
};

/// Every constant defined for this k (edge ones need k >= 3, vertex ones k >= 2).
auto crossover_constants(std::uint64_t k) -> CrossoverConstants;

// Region classification

enum class Region
{
    TheoremB1,
    TheoremB2,
    Equal,
    Gap
};

auto to_string(Region) -> std::string_view;

struct Classification
{
    Region region = Region::Gap;
    /// kt/m (edge) or (k+1)t/n (vertex).
    double x = 0.0;
    /// The thresholds the label was decided against, when they exist.
    std::optional<double> lower_threshold;
    std::optional<double> upper_threshold;
    BoundReport report;
    /// False only when a theorem label contradicts the direct comparison.
    bool agrees = true;
};

/// Edge side. k = 2 with t <= m < 2t is TheoremB1; for k >= 3
/// TheoremB1 when x <= x0 (statement variant), TheoremB2 when x >= x0'.
auto classify_edge(const EdgeBoundInput & in) -> Classification;

/// Vertex side. k = 1 is TheoremB1; for k >= 2 TheoremB1 when x <= x0,
/// TheoremB2 when x0' <= x <= k+1.
auto classify_vertex(const VertexBoundInput & in) -> Classification;

// Grid scans

enum class Direction
{
    Increasing,
    Decreasing
};

struct ScanReport
{
    bool monotone = true;
    std::size_t points = 0;
    /// Index i of the first pair (i, i+1) breaking strict monotonicity.
    std::optional<std::size_t> first_violation;
    double first_value = 0.0;
    double last_value = 0.0;
};

auto monotonicity_scan(const std::function<double(double)> & fn, std::span<const double> grid,
    Direction direction) -> ScanReport;

/// `count` points spaced evenly from lo to hi inclusive.
auto linear_grid(double lo, double hi, std::size_t count) -> std::vector<double>;

/// `count` points spaced evenly in log from lo to hi inclusive (lo > 0).
auto log_grid(double lo, double hi, std::size_t count) -> std::vector<double>;

/// Grid point with the smallest fn value (first one on ties).
auto grid_argmin(const std::function<double(double)> & fn, std::span<const double> grid) -> double;

}
