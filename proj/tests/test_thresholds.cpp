#include <deltared/error.hpp>
#include <deltared/thresholds.hpp>

#include <boost/math/special_functions/lambert_w.hpp>
#include <boost/math/tools/roots.hpp>

#include <doctest.h>

#include <cmath>

using namespace deltared;
using doctest::Approx;

namespace
{
    // the larger root of c e^((x-1)/2) = x, via the lower Lambert W branch
    auto lambert_x_c(double c) -> double
    {
        return -2.0 * boost::math::lambert_wm1(-c / (2.0 * std::sqrt(std::exp(1.0))));
    }

    template <typename F>
    auto toms748(F f, double lo, double hi) -> double
    {
        boost::math::tools::eps_tolerance<double> tol(50);
        std::uintmax_t iterations = 200;
        auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, tol, iterations);
        return (a + b) / 2.0;
    }

    auto log_vertex_equation(double k)
    {
        return [k](double x) { return k * std::log(2.0 * k / (2.0 * k + 1.0 - x)) - std::log(x); };
    }

    auto log_edge_equation(double k, double exponent)
    {
        return [k, exponent](double x) { return exponent * std::log((2.0 * k - 1.0) / (2.0 * k - x)) - std::log(x); };
    }
}

TEST_CASE("x_c agrees with Lambert W")
{
    for (double c : {1.0, 0.25, 0.5, 0.9, 0.99, 0.1, 0.01}) {
        CAPTURE(c);
        CHECK(solve_x_c(c) == Approx(lambert_x_c(c)).epsilon(1e-11));
    }
    CHECK(x1() == Approx(3.5128624172523395).epsilon(1e-13));
    CHECK(x_quarter() == Approx(7.908453129970746).epsilon(1e-13));
    CHECK(std::abs(std::exp((x1() - 1) / 2) - x1()) <= 1e-9);
    CHECK(std::abs(0.25 * std::exp((x_quarter() - 1) / 2) - x_quarter()) <= 1e-9);
}

TEST_CASE("vertex crossover constants agree with an independent root finder")
{
    for (double k : {2.0, 3.0, 5.0, 7.0, 10.0, 50.0, 200.0}) {
        CAPTURE(k);
        const double x0 = solve_x0_vertex(k);
        CHECK(x0 == Approx(toms748(log_vertex_equation(k), 1.001, x1())).epsilon(1e-11));
        const double c = std::pow((k + 4.0) / (2.0 * k + 4.0), 2.0);
        CHECK(solve_x0p_vertex(k) == Approx(lambert_x_c(c)).epsilon(1e-11));
        CHECK(std::abs(f_vertex(x0, k)) <= 1e-9);
    }
    CHECK(solve_x0_vertex(2) == Approx(2.4384471872).epsilon(1e-10));
    CHECK(solve_x0p_vertex(2) == Approx(5.5941828530).epsilon(1e-10));
    CHECK(solve_x0_vertex(7) == Approx(3.0763854).epsilon(1e-7));
    CHECK(solve_x0p_vertex(7) == Approx(6.8053132856).epsilon(1e-10));
    CHECK(solve_x0_vertex(50) == Approx(3.44153617).epsilon(1e-8));
    CHECK(solve_x0p_vertex(50) == Approx(7.70549477).epsilon(1e-8));
}

TEST_CASE("edge crossover constants agree with an independent root finder")
{
    for (double k : {3.0, 4.0, 6.0, 10.0, 25.0, 100.0}) {
        CAPTURE(k);
        CHECK(solve_x0_edge(k, X0Variant::Statement) == Approx(toms748(log_edge_equation(k, k), 1.001, x1())).epsilon(1e-11));
        CHECK(solve_x0_edge(k, X0Variant::Proof) == Approx(toms748(log_edge_equation(k, k - 0.5), 1.001, x1())).epsilon(1e-11));
        CHECK(solve_x0p_edge(k) == Approx(lambert_x_c(std::sqrt((2 * k - 2) / (2 * k - 1)))).epsilon(1e-11));
    }
    CHECK(solve_x0_edge(3) == Approx(2.0881360865).epsilon(1e-10));
    CHECK(solve_x0_edge(3, X0Variant::Proof) == Approx(2.5750246861).epsilon(1e-10));
    CHECK(solve_x0p_edge(3) == Approx(3.9914554078).epsilon(1e-10));
    CHECK(solve_x0_edge(4) == Approx(2.34073674).epsilon(1e-8));
    CHECK(solve_x0p_edge(10) == Approx(3.63563454).epsilon(1e-8));
    CHECK_THROWS_AS(solve_x0_edge(2), DomainError);
    CHECK_THROWS_AS(solve_x0_vertex(1), DomainError);
}

TEST_CASE("edge constants approach x1 for large k without overflow")
{
    for (double k : {1e3, 1e4, 1e5, 1e6}) {
        CAPTURE(k);
        const double a = solve_x0_edge(k);
        const double b = solve_x0p_edge(k);
        CHECK(std::isfinite(a));
        CHECK(std::isfinite(b));
        CHECK(a < x1());
        CHECK(b > x1());
    }
    CHECK(std::abs(solve_x0_edge(1e6) - x1()) < 1e-3);
    CHECK(std::abs(solve_x0p_edge(1e6) - x1()) < 1e-3);
    CHECK(std::abs(solve_x0_vertex(1e6) - x1()) < 1e-3);
}

TEST_CASE("lemma functions")
{
    CHECK(f_limit(1.0) == Approx(4.0).epsilon(1e-15));
    CHECK(f_limit(1e6) - std::exp(1.0) < 1e-5);
    CHECK(f_limit(1e6) > std::exp(1.0));
    CHECK(f_c(1.0, 2.0) == Approx(std::sqrt(std::exp(1.0)) / 2.0).epsilon(1e-15));
    CHECK(f_edge(1.0, 3.0) == Approx(0.0).epsilon(1e-15));
    CHECK(f_edge_statement(2.0, 3.0) == Approx(std::pow(5.0 / 4.0, 3.0) - 2.0).epsilon(1e-14));

    auto grid = log_grid(1.0, 1e6, 1000);
    CHECK(grid.front() == 1.0);
    CHECK(grid.back() == Approx(1e6).epsilon(1e-14));
    CHECK(monotonicity_scan(f_limit, grid, Direction::Decreasing).monotone);
    auto flipped = monotonicity_scan(f_limit, grid, Direction::Increasing);
    CHECK_FALSE(flipped.monotone);
    CHECK(flipped.first_violation == std::size_t{0});

    auto fine = linear_grid(1.0, 10.0, 901);
    CHECK(grid_argmin([](double x) { return f_c(0.5, x); }, fine) == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("bisection")
{
    auto root = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0);
    CHECK(root == Approx(std::sqrt(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, 0.0, 2.0), DomainError);
}

TEST_CASE("edge classifier")
{
    auto a = classify_edge({3, 10, 20, Mode::Graph});
    CHECK(a.region == Region::TheoremB1);
    CHECK(a.report.verdict == Verdict::B1Smaller);
    CHECK(a.agrees);

    auto b = classify_edge({10, 100, 260, Mode::Abstract});
    CHECK(b.region == Region::TheoremB2);
    CHECK(b.report.verdict == Verdict::B2Smaller);
    CHECK_FALSE(b.report.realizable);

    CHECK(classify_edge({4, 5, 20, Mode::Graph}).region == Region::Equal);
    CHECK(classify_edge({2, 5, 7, Mode::Graph}).region == Region::TheoremB1);
    CHECK(classify_edge({2, 5, 4, Mode::Abstract}).region == Region::Gap);

    // between the two thresholds only the direct comparison decides
    auto gap = classify_edge({3, 100, 100, Mode::Abstract});
    CHECK(gap.region == Region::Gap);
    CHECK(gap.x == Approx(3.0));
    CHECK(gap.agrees);
    CHECK_THROWS_AS(classify_edge({1, 2, 2, Mode::Graph}), DomainError);
}

TEST_CASE("vertex classifier")
{
    CHECK(classify_vertex({2, 5, 10, Mode::Graph}).region == Region::TheoremB1);
    CHECK(classify_vertex({3, 4, 16, Mode::Graph}).region == Region::Equal);

    // x = 80/12 lies below x0'(7) = 6.805, so neither theorem applies
    auto c = classify_vertex({7, 10, 12, Mode::Graph});
    CHECK(c.x == Approx(80.0 / 12.0));
    CHECK(c.region == Region::Gap);
    CHECK(c.report.verdict == Verdict::B2Smaller);

    auto d = classify_vertex({7, 10, 11, Mode::Graph});
    CHECK(d.region == Region::TheoremB2);
    CHECK(d.report.verdict == Verdict::B2Smaller);

    CHECK(classify_vertex({1, 4, 4, Mode::Graph}).region == Region::TheoremB1);
}

TEST_CASE("classifier labels never contradict the direct comparison")
{
    for (std::uint64_t k = 2; k <= 30; ++k)
        for (std::uint64_t n = 1; n <= (k + 1) * 40; ++n) {
            auto c = classify_vertex({k, 40, n, Mode::Abstract});
            CAPTURE(k);
            CAPTURE(n);
            CHECK(c.agrees);
        }
    for (std::uint64_t k = 3; k <= 30; ++k)
        for (std::uint64_t m = 1; m <= k * 40; ++m) {
            auto c = classify_edge({k, 40, m, Mode::Abstract});
            CAPTURE(k);
            CAPTURE(m);
            CHECK(c.agrees);
        }
}

TEST_CASE("crossover table")
{
    auto c2 = crossover_constants(2);
    CHECK(c2.x0_vertex);
    CHECK_FALSE(c2.x0_edge_statement);
    auto c3 = crossover_constants(3);
    REQUIRE(c3.x0p_edge);
    CHECK(*c3.x0p_edge == Approx(3.9914554078).epsilon(1e-10));
    CHECK(c3.x1 == x1());
}
