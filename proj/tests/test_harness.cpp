#include <deltared/error.hpp>
#include <deltared/harness.hpp>

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace deltared;
using doctest::Approx;

namespace
{
    auto config(const char * generator, std::uint64_t trials = 0) -> RunConfig
    {
        RunConfig c;
        c.subcommand = "analyze";
        c.generator = generator;
        c.trials = trials;
        return c;
    }

    auto lines(const std::string & text) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
            out.push_back(line);
        return out;
    }

    auto count(const std::string & s, char c) -> std::size_t
    {
        return static_cast<std::size_t>(std::count(s.begin(), s.end(), c));
    }
}

TEST_CASE("reals use twelve significant digits")
{
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
    CHECK(format_real(2.5) == "2.5");
    CHECK(format_real(1e-20) == "1e-20");
    CHECK(format_real(123456789.0123456) == "123456789.012");
    CHECK(json_real(1.0 / 3.0).dump() == "0.333333333333");
    CHECK(json_real(std::nan("")).is_null());
}

TEST_CASE("analyze a star forest")
{
    auto c = config("star:3,2");
    auto r = analyze(parse_generator("star:3,2", 1), c);
    CHECK(r.consistent());
    CHECK(r.lambda.value == 2);
    CHECK(r.lambda_e.value == 2);
    REQUIRE(r.vertex);
    REQUIRE(r.edge);
    CHECK(r.vertex->report.b1 == 2.0);
    CHECK(*r.vertex->report.b2 == 2.0);
    CHECK(r.edge->report.b1 == 2.0);
    CHECK(*r.edge->report.b2 == 2.0);
    CHECK(r.vertex->report.verdict == Verdict::Equal);
    CHECK(r.edge->report.verdict == Verdict::Equal);
}

TEST_CASE("analyze the 5-cycle and K2")
{
    auto r = analyze(gen_cycle(5), config("cycle:5"));
    CHECK(r.lambda.value == 2);
    CHECK(r.lambda_e.value == 3);
    CHECK(r.vertex->report.b1 == 2.5);
    CHECK(*r.vertex->report.b2 == Approx(3.0755).epsilon(1e-4));
    CHECK(r.edge->report.b1 == Approx(10.0 / 3.0));
    CHECK(*r.edge->report.b2 == Approx(3.75));
    CHECK(r.consistent());

    auto k2 = analyze(gen_path(2), config("path:2"));
    CHECK(k2.lambda.value == 1);
    CHECK(k2.lambda_e.value == 1);
    CHECK(k2.vertex->report.b1 == 1.0);
    CHECK(*k2.vertex->report.b2 > 1.0);
    CHECK_FALSE(k2.edge);
    REQUIRE(k2.edge_k1);
    CHECK(k2.edge_k1->verdict == Verdict::B2Undefined);
    CHECK(k2.consistent());
}

TEST_CASE("json reports are deterministic and keep field order")
{
    auto c = config("gnp:10,0.4", 500);
    c.seed = 17;
    auto g = parse_generator(*c.generator, c.seed);
    auto first = to_json(analyze(g, c), c).dump(2);
    auto second = to_json(analyze(parse_generator(*c.generator, c.seed), c), c).dump(2);
    CHECK(first == second);

    auto j = to_json(analyze(g, c), c);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    const std::vector<std::string> expected{"tool", "config", "graph", "stats", "lambda", "lambda_e", "vertex_bounds",
        "edge_bounds", "slack", "vertex_sampling", "edge_sampling", "consistent", "problems"};
    CHECK(keys == expected);
    CHECK(j["tool"] == version_string());
    CHECK(j["config"]["seed"] == 17);
    CHECK(j["config"]["generator"] == "gnp:10,0.4");
}

TEST_CASE("csv reports have a header and one row with matching columns")
{
    auto c = config("cycle:6");
    c.format = OutputFormat::Csv;
    auto text = to_csv(analyze(gen_cycle(6), c), c);
    auto rows = lines(text);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].rfind("tool,subcommand,", 0) == 0);
    CHECK(count(rows[0], ',') == count(rows[1], ','));
    CHECK(rows[1].find(';') == std::string::npos);
    CHECK(text == to_csv(analyze(gen_cycle(6), c), c));
}

TEST_CASE("generator specs")
{
    CHECK(parse_generator("star:3,2", 1) == gen_star_forest(3, 2));
    CHECK(parse_generator("cycle:7", 1) == gen_cycle(7));
    CHECK(parse_generator("gnp:9,0.5", 4) == gen_gnp(9, 0.5, 4));
    CHECK_THROWS_AS(parse_generator("star:3", 1), DomainError);
    CHECK_THROWS_AS(parse_generator("wheel:5", 1), DomainError);
    CHECK_THROWS_AS(parse_generator("cycle:x", 1), DomainError);
    CHECK_THROWS_AS(parse_generator("gnp", 1), DomainError);
}

TEST_CASE("default corpus contents")
{
    auto corpus = default_corpus({});
    std::size_t gnp = 0, stars = 0;
    for (const auto & item : corpus) {
        CHECK(item.graph.vertex_count() <= 12);
        gnp += item.name.rfind("gnp:", 0) == 0;
        stars += item.name.rfind("star:", 0) == 0;
    }
    CHECK(gnp == 500);
    CHECK(stars > 0);
    CHECK(corpus.size() == 500 + 12 + 10 + stars);

    auto again = default_corpus({});
    CHECK(again.size() == corpus.size());
    CHECK(again[123].graph == corpus[123].graph);
}

TEST_CASE("thresholds table")
{
    auto rows = thresholds_table(2, 4);
    REQUIRE(rows.size() == 3);
    CHECK(*rows[0].x0_vertex == Approx(2.438).epsilon(1e-3));
    CHECK(*rows[0].x0p_vertex == Approx(5.594).epsilon(1e-3));
    CHECK(*rows[1].x0_edge_statement == Approx(2.088).epsilon(1e-3));
    CHECK(*rows[1].x0p_edge == Approx(3.991).epsilon(1e-3));
    auto csv = lines(thresholds_csv(rows));
    CHECK(csv[0] == "k,x1,x_quarter,x0_vertex,x0p_vertex,x0_edge_statement,x0_edge_proof,x0p_edge");
    CHECK(csv[1].rfind("2,3.51286241725,7.90845312997,2.43844718719,5.59418285298,,,", 0) == 0);
    CHECK_THROWS_AS(thresholds_table(1, 3), DomainError);
    CHECK_THROWS_AS(thresholds_table(5, 3), DomainError);
}

TEST_CASE("sweeps")
{
    SweepSpec graph_edges;
    graph_edges.mode = Mode::Graph;
    auto g = sweep(graph_edges);
    CHECK(g.disagreements == 0);
    CHECK(g.theorem_b2 == 0);
    CHECK(g.gap == 0);
    CHECK(g.theorem_b1 + g.equal == g.rows.size());

    SweepSpec vertex7;
    vertex7.kind = ReductionKind::Vertex;
    vertex7.k_min = vertex7.k_max = 7;
    auto v = sweep(vertex7);
    CHECK(v.theorem_b1 > 0);
    CHECK(v.theorem_b2 > 0);
    CHECK(v.gap > 0);
    CHECK(v.disagreements == 0);

    auto csv = lines(sweep_csv(v));
    CHECK(csv[0] == "kind,mode,k,t,n,x,b1,b2,verdict,region,agrees");
    CHECK(csv.size() == v.rows.size() + 1);
}

TEST_CASE("verify on a small corpus")
{
    CorpusSpec spec;
    spec.gnp_count = 40;
    spec.max_vertices = 8;
    auto corpus = default_corpus(spec);
    VerifyOptions options;
    options.trials = 2000;

    auto results = verify(corpus, options);
    CHECK(results.size() == 13);
    for (const auto & r : results) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.passed);
    }

    options.broken_bound = "e1";
    auto broken = verify(corpus, options);
    CHECK_FALSE(broken.back().passed);
    CHECK(broken.back().name == "bound-validity");
    REQUIRE(broken.back().reproducer);
    auto repro = parse_edge_list(*broken.back().reproducer);
    CHECK(repro.vertex_count() > 0);

    options.broken_bound.reset();
    options.budget = 3;
    auto starved = verify(corpus, options);
    CHECK_FALSE(starved.back().passed);
    CHECK(starved.back().budget_exhausted);

    CHECK_THROWS_WITH_AS(verify({}, options), "no instances", DomainError);
}
