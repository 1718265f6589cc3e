#include "deltared/thresholds.hpp"
#include "deltared/error.hpp"

#include <algorithm>
#include <cmath>

using std::optional;
using std::size_t;
using std::vector;

namespace deltared {

namespace
{
    auto require(bool ok, const char * message) -> void
    {
        if (! ok)
            throw DomainError(message);
    }

    // (1 + a)^e for small a without forming 1 + a, so that large exponents
    // (k near 1e6) keep full precision.
    auto pow1p(double a, double e) -> double
    {
        return std::exp(e * std::log1p(a));
    }

    constexpr double kBracketMargin = 1e-9;
}

auto f_limit(double x) -> double
{
    require(x > 0.0, "f_limit needs x > 0");
    return pow1p(1.0 / x, x + 1.0);
}

auto f_c(double c, double x) -> double
{
    require(c > 0.0 && c <= 1.0, "f_c needs 0 < c <= 1");
    require(x >= 1.0, "f_c needs x >= 1");
    return c * std::exp((x - 1.0) / 2.0) / x;
}

auto f_edge(double x, double y) -> double
{
    require(y >= 3.0, "f_edge needs y >= 3");
    require(x >= 1.0 && x < 2.0 * y, "f_edge needs 1 <= x < 2y");
    return pow1p((x - 1.0) / (2.0 * y - x), y - 0.5) - x;
}

auto f_edge_statement(double x, double y) -> double
{
    require(y >= 3.0, "f_edge_statement needs y >= 3");
    require(x >= 1.0 && x < 2.0 * y, "f_edge_statement needs 1 <= x < 2y");
    return pow1p((x - 1.0) / (2.0 * y - x), y) - x;
}

auto f_vertex(double x, double y) -> double
{
    require(y >= 2.0, "f_vertex needs y >= 2");
    require(x >= 1.0 && x < 2.0 * y + 1.0, "f_vertex needs 1 <= x < 2y+1");
    return pow1p((x - 1.0) / (2.0 * y + 1.0 - x), y) - x;
}

auto bisect(const std::function<double(double)> & fn, double lo, double hi, double width) -> double
{
    require(lo < hi, "bisection needs lo < hi");
    double flo = fn(lo);
    const double fhi = fn(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    require((flo < 0.0) != (fhi < 0.0), "bisection bracket has no sign change");

    for (int iteration = 0; iteration < 400 && hi - lo > width; ++iteration) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi)
            break;
        const double fmid = fn(mid);
        if (fmid == 0.0)
            return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        }
        else
            hi = mid;
    }
    return lo + (hi - lo) / 2.0;
}

auto solve_x_c(double c) -> double
{
    require(c > 0.0 && c <= 1.0, "x_c is defined for 0 < c <= 1");
    auto g = [c](double x) { return f_c(c, x) - 1.0; };

    // g(2) = c e^(1/2)/2 - 1 < 0; grow the right end until g turns positive
    double hi = 4.0;
    while (g(hi) <= 0.0) {
        hi *= 2.0;
        require(hi < 1e4, "x_c bracket search diverged (c too small)");
    }
    return bisect(g, 2.0, hi);
}

auto x1() -> double
{
    static const double value = solve_x_c(1.0);
    return value;
}

auto x_quarter() -> double
{
    static const double value = solve_x_c(0.25);
    return value;
}

auto to_string(X0Variant v) -> std::string_view
{
    return v == X0Variant::Statement ? "statement" : "proof";
}

auto solve_x0_edge(double k, X0Variant variant) -> double
{
    require(k >= 3.0, "x0 (edge) is defined for k >= 3");
    auto g = [k, variant](double x) {
        return variant == X0Variant::Statement ? f_edge_statement(x, k) : f_edge(x, k);
    };
    return bisect(g, 1.0 + kBracketMargin, std::min(2.0 * k - kBracketMargin, x1()));
}

auto solve_x0p_edge(double k) -> double
{
    require(k >= 3.0, "x0' (edge) is defined for k >= 3");
    return solve_x_c(std::sqrt((2.0 * k - 2.0) / (2.0 * k - 1.0)));
}

auto solve_x0_vertex(double k) -> double
{
    require(k >= 2.0, "x0 (vertex) is defined for k >= 2");
    auto g = [k](double x) { return f_vertex(x, k); };
    return bisect(g, 1.0 + kBracketMargin, std::min(2.0 * k + 1.0 - kBracketMargin, x1()));
}

auto solve_x0p_vertex(double k) -> double
{
    require(k >= 2.0, "x0' (vertex) is defined for k >= 2");
    const double c = (k + 4.0) / (2.0 * k + 4.0);
    return solve_x_c(c * c);
}

auto crossover_constants(std::uint64_t k) -> CrossoverConstants
{
    CrossoverConstants c;
    c.k = k;
    c.x1 = x1();
    c.x_quarter = x_quarter();
    const auto kd = static_cast<double>(k);
    if (k >= 3) {
        c.x0_edge_statement = solve_x0_edge(kd, X0Variant::Statement);
        c.x0_edge_proof = solve_x0_edge(kd, X0Variant::Proof);
        c.x0p_edge = solve_x0p_edge(kd);
    }
    if (k >= 2) {
        c.x0_vertex = solve_x0_vertex(kd);
        c.x0p_vertex = solve_x0p_vertex(kd);
    }
    return c;
}

auto to_string(Region r) -> std::string_view
{
    switch (r) {
        case Region::TheoremB1: return "TheoremB1";
        case Region::TheoremB2: return "TheoremB2";
        case Region::Equal: return "Equal";
        case Region::Gap: return "Gap";
    }
    return "?";
}

namespace
{
    auto agreement(Region region, Verdict verdict) -> bool
    {
        switch (region) {
            case Region::TheoremB1: return verdict == Verdict::B1Smaller;
            case Region::TheoremB2: return verdict == Verdict::B2Smaller;
            case Region::Equal: return verdict == Verdict::Equal;
            case Region::Gap: return true;
        }
        return false;
    }
}

auto classify_edge(const EdgeBoundInput & in) -> Classification
{
    require(in.k >= 2, "edge classification needs k >= 2");

    Classification c;
    c.report = compare_edge(in);
    c.x = static_cast<double>(in.k) * static_cast<double>(in.t) / static_cast<double>(in.m);

    if (in.m == in.k * in.t)
        c.region = Region::Equal;
    else if (in.k == 2)
        // (2t-m)(3m-2t)/(12t) > 0 on t <= m < 2t
        c.region = in.m >= in.t ? Region::TheoremB1 : Region::Gap;
    else {
        const auto kd = static_cast<double>(in.k);
        c.lower_threshold = solve_x0_edge(kd, X0Variant::Statement);
        c.upper_threshold = solve_x0p_edge(kd);
        if (c.x <= *c.lower_threshold)
            c.region = Region::TheoremB1;
        else if (c.x >= *c.upper_threshold)
            c.region = Region::TheoremB2;
        else
            c.region = Region::Gap;
    }

    c.agrees = agreement(c.region, c.report.verdict);
    return c;
}

auto classify_vertex(const VertexBoundInput & in) -> Classification
{
    Classification c;
    c.report = compare_vertex(in);
    c.x = static_cast<double>(in.k + 1) * static_cast<double>(in.t) / static_cast<double>(in.n);

    if (in.n == (in.k + 1) * in.t)
        c.region = Region::Equal;
    else if (in.k == 1)
        // a graph with maximum degree 1 has n = t
        c.region = in.n == in.t ? Region::TheoremB1 : Region::Gap;
    else {
        const auto kd = static_cast<double>(in.k);
        c.lower_threshold = solve_x0_vertex(kd);
        c.upper_threshold = solve_x0p_vertex(kd);
        if (c.x <= *c.lower_threshold)
            c.region = Region::TheoremB1;
        else if (c.x >= *c.upper_threshold && in.n >= in.t)
            c.region = Region::TheoremB2;
        else
            c.region = Region::Gap;
    }

    c.agrees = agreement(c.region, c.report.verdict);
    return c;
}

auto monotonicity_scan(const std::function<double(double)> & fn, std::span<const double> grid,
    Direction direction) -> ScanReport
{
    ScanReport r;
    r.points = grid.size();
    if (grid.empty())
        return r;

    double previous = fn(grid.front());
    r.first_value = previous;
    for (size_t i = 1; i < grid.size(); ++i) {
        const double value = fn(grid[i]);
        const bool ok = direction == Direction::Increasing ? value > previous : value < previous;
        if (! ok && ! r.first_violation) {
            r.monotone = false;
            r.first_violation = i - 1;
        }
        previous = value;
    }
    r.last_value = previous;
    return r;
}

auto linear_grid(double lo, double hi, size_t count) -> vector<double>
{
    require(count >= 2, "grid needs at least two points");
    vector<double> grid(count);
    for (size_t i = 0; i < count; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    grid.back() = hi;
    return grid;
}

auto log_grid(double lo, double hi, size_t count) -> vector<double>
{
    require(lo > 0.0 && hi > lo, "log grid needs 0 < lo < hi");
    auto grid = linear_grid(std::log(lo), std::log(hi), count);
    for (auto & g : grid)
        g = std::exp(g);
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

auto grid_argmin(const std::function<double(double)> & fn, std::span<const double> grid) -> double
{
    require(! grid.empty(), "empty grid");
    double best_x = grid.front();
    double best = fn(best_x);
    for (auto x : grid.subspan(1)) {
        const double v = fn(x);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    return best_x;
}

}
