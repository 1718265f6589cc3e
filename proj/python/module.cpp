#include <deltared/error.hpp>
#include <deltared/harness.hpp>

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace deltared;

namespace
{
    auto edge_tuples(std::span<const Edge> edges) -> std::vector<std::pair<Vertex, Vertex>>
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const auto & e : edges)
            out.emplace_back(e.u, e.v);
        return out;
    }

    auto make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> & edges) -> Graph
    {
        Graph g(n);
        for (const auto & [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    auto to_edges(const std::vector<std::pair<Vertex, Vertex>> & pairs) -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (const auto & [u, v] : pairs)
            out.emplace_back(u, v);
        return out;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact and bounded minimum max-degree-reducing vertex and edge sets";
    m.attr("__version__") = DELTARED_VERSION;

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    // graphs

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def("add_edge", &Graph::add_edge)
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", [](const Graph & g) { return edge_tuples(g.edges()); })
        .def("neighbors", [](const Graph & g, Vertex v) {
            auto s = g.neighbors(v);
            return std::vector<Vertex>(s.begin(), s.end());
        })
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph & g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<GraphStats>(m, "GraphStats")
        .def_readonly("k", &GraphStats::k)
        .def_readonly("t", &GraphStats::t)
        .def_readonly("n", &GraphStats::n)
        .def_readonly("m", &GraphStats::m)
        .def(py::self == py::self)
        .def("__iter__", [](const GraphStats & s) {
            return py::iter(py::make_tuple(s.k, s.t, s.n, s.m));
        })
        .def("__repr__", [](const GraphStats & s) {
            return "GraphStats(k=" + std::to_string(s.k) + ", t=" + std::to_string(s.t) + ", n=" + std::to_string(s.n)
                + ", m=" + std::to_string(s.m) + ")";
        });

    py::class_<DerivedGraph>(m, "DerivedGraph")
        .def_readonly("graph", &DerivedGraph::graph)
        .def_readonly("original_index", &DerivedGraph::original_index)
        .def_readonly("new_index", &DerivedGraph::new_index);

    m.def("max_degree", &max_degree);
    m.def("max_degree_set", &max_degree_set);
    m.def("derive_gv", &derive_gv);
    m.def("derive_ge", &derive_ge);
    m.def("stats", &stats);
    m.def("star_forest", &gen_star_forest, py::arg("k"), py::arg("t"));
    m.def("cycle", &gen_cycle, py::arg("n"));
    m.def("path", &gen_path, py::arg("n"));
    m.def("complete", &gen_complete, py::arg("n"));
    m.def("gnp", &gen_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("parse_generator", &parse_generator, py::arg("spec"), py::arg("seed") = 1);
    m.def("parse_edge_list", [](const std::string & text) { return parse_edge_list(text); });
    m.def("serialize", &serialize);

    // bounds

    py::enum_<Mode>(m, "Mode").value("Graph", Mode::Graph).value("Abstract", Mode::Abstract);
    py::enum_<Verdict>(m, "Verdict")
        .value("B1Smaller", Verdict::B1Smaller)
        .value("B2Smaller", Verdict::B2Smaller)
        .value("Equal", Verdict::Equal)
        .value("B2Undefined", Verdict::B2Undefined);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("mode", &BoundReport::mode)
        .def_readonly("realizable", &BoundReport::realizable)
        .def_readonly("b1", &BoundReport::b1)
        .def_readonly("b2", &BoundReport::b2)
        .def_readonly("ln_bound", &BoundReport::ln_bound)
        .def_readonly("u_at_pstar", &BoundReport::u_at_pstar)
        .def_readonly("p_star", &BoundReport::p_star)
        .def_readonly("verdict", &BoundReport::verdict);

    m.def("bound_v1", &bound_v1, py::arg("k"), py::arg("t"), py::arg("n"));
    m.def("bound_v2", &bound_v2, py::arg("k"), py::arg("t"), py::arg("n"));
    m.def("bound_v_ln", &bound_v_ln, py::arg("k"), py::arg("t"), py::arg("n"));
    m.def("u_vertex", &u_vertex, py::arg("p"), py::arg("k"), py::arg("t"), py::arg("n"));
    m.def("p_star_vertex", &p_star_vertex, py::arg("k"), py::arg("t"), py::arg("n"));
    m.def("bound_e1", &bound_e1, py::arg("k"), py::arg("t"), py::arg("m"));
    m.def("bound_e2", &bound_e2, py::arg("k"), py::arg("t"), py::arg("m"));
    m.def("u_edge", &u_edge, py::arg("p"), py::arg("k"), py::arg("t"), py::arg("m"));
    m.def("p_star_edge", &p_star_edge, py::arg("k"), py::arg("t"), py::arg("m"));
    m.def("k2_edge_identity", &k2_edge_identity, py::arg("t"), py::arg("m"));
    m.def("compare_vertex", [](std::uint64_t k, std::uint64_t t, std::uint64_t n, Mode mode) {
        return compare_vertex({k, t, n, mode});
    }, py::arg("k"), py::arg("t"), py::arg("n"), py::arg("mode") = Mode::Graph);
    m.def("compare_edge", [](std::uint64_t k, std::uint64_t t, std::uint64_t m_, Mode mode) {
        return compare_edge({k, t, m_, mode});
    }, py::arg("k"), py::arg("t"), py::arg("m"), py::arg("mode") = Mode::Graph);

    // exact solvers and certificates

    py::enum_<ReductionKind>(m, "ReductionKind").value("Vertex", ReductionKind::Vertex).value("Edge", ReductionKind::Edge);
    py::enum_<SearchStatus>(m, "SearchStatus")
        .value("Optimal", SearchStatus::Optimal)
        .value("Inconclusive", SearchStatus::Inconclusive);
    py::enum_<SearchStrategy>(m, "SearchStrategy")
        .value("BranchAndBound", SearchStrategy::BranchAndBound)
        .value("Exhaustive", SearchStrategy::Exhaustive);

    py::class_<ReductionCertificate>(m, "ReductionCertificate")
        .def_readonly("kind", &ReductionCertificate::kind)
        .def_readonly("vertices", &ReductionCertificate::vertices)
        .def_property_readonly("edges", [](const ReductionCertificate & c) { return edge_tuples(c.edges); })
        .def_readonly("resulting_max_degree", &ReductionCertificate::resulting_max_degree)
        .def_readonly("verified", &ReductionCertificate::verified)
        .def("__len__", &ReductionCertificate::size);

    py::class_<ExactResult>(m, "ExactResult")
        .def_readonly("status", &ExactResult::status)
        .def_readonly("value", &ExactResult::value)
        .def_readonly("lower_bound", &ExactResult::lower_bound)
        .def_readonly("certificate", &ExactResult::certificate)
        .def_readonly("sets_examined", &ExactResult::sets_examined);

    m.attr("DEFAULT_BUDGET") = kDefaultBudget;
    m.def("lambda_exact", &lambda_exact, py::arg("g"), py::arg("budget") = kDefaultBudget,
        py::arg("strategy") = SearchStrategy::BranchAndBound);
    m.def("lambda_e_exact", &lambda_e_exact, py::arg("g"), py::arg("budget") = kDefaultBudget,
        py::arg("strategy") = SearchStrategy::BranchAndBound);
    m.def("is_reducing_set", [](const Graph & g, const std::vector<Vertex> & removed) {
        return is_reducing_set(g, removed);
    });
    m.def("is_reducing_edge_set", [](const Graph & g, const std::vector<std::pair<Vertex, Vertex>> & removed) {
        return is_reducing_edge_set(g, to_edges(removed));
    });

    // randomized constructions

    py::class_<MonteCarloReport>(m, "MonteCarloReport")
        .def_readonly("kind", &MonteCarloReport::kind)
        .def_readonly("trials", &MonteCarloReport::trials)
        .def_readonly("seed", &MonteCarloReport::seed)
        .def_readonly("p", &MonteCarloReport::p)
        .def_readonly("empirical_mean", &MonteCarloReport::empirical_mean)
        .def_readonly("empirical_std", &MonteCarloReport::empirical_std)
        .def_readonly("std_defined", &MonteCarloReport::std_defined)
        .def_readonly("expected", &MonteCarloReport::expected)
        .def_readonly("z_score", &MonteCarloReport::z_score)
        .def_readonly("min_size", &MonteCarloReport::min_size)
        .def_readonly("max_size", &MonteCarloReport::max_size)
        .def_readonly("all_verified", &MonteCarloReport::all_verified);

    m.def("sample_reducing_set", py::overload_cast<const Graph &, double, std::uint64_t>(&sample_reducing_set),
        py::arg("g"), py::arg("p"), py::arg("seed"));
    m.def("sample_reducing_edge_set", py::overload_cast<const Graph &, double, std::uint64_t>(&sample_reducing_edge_set),
        py::arg("g"), py::arg("p"), py::arg("seed"));
    m.def("monte_carlo", &monte_carlo, py::arg("g"), py::arg("kind"), py::arg("p"), py::arg("trials"), py::arg("seed"));

    // thresholds

    py::enum_<X0Variant>(m, "X0Variant").value("Statement", X0Variant::Statement).value("Proof", X0Variant::Proof);
    py::enum_<Region>(m, "Region")
        .value("TheoremB1", Region::TheoremB1)
        .value("TheoremB2", Region::TheoremB2)
        .value("Equal", Region::Equal)
        .value("Gap", Region::Gap);

    py::class_<CrossoverConstants>(m, "CrossoverConstants")
        .def_readonly("k", &CrossoverConstants::k)
        .def_readonly("x1", &CrossoverConstants::x1)
        .def_readonly("x_quarter", &CrossoverConstants::x_quarter)
        .def_readonly("x0_edge_statement", &CrossoverConstants::x0_edge_statement)
        .def_readonly("x0_edge_proof", &CrossoverConstants::x0_edge_proof)
        .def_readonly("x0p_edge", &CrossoverConstants::x0p_edge)
        .def_readonly("x0_vertex", &CrossoverConstants::x0_vertex)
        .def_readonly("x0p_vertex", &CrossoverConstants::x0p_vertex);

    py::class_<Classification>(m, "Classification")
        .def_readonly("region", &Classification::region)
        .def_readonly("x", &Classification::x)
        .def_readonly("lower_threshold", &Classification::lower_threshold)
        .def_readonly("upper_threshold", &Classification::upper_threshold)
        .def_readonly("report", &Classification::report)
        .def_readonly("agrees", &Classification::agrees);

    m.def("f_limit", &f_limit);
    m.def("f_c", &f_c, py::arg("c"), py::arg("x"));
    m.def("f_edge", &f_edge, py::arg("x"), py::arg("y"));
    m.def("f_edge_statement", &f_edge_statement, py::arg("x"), py::arg("y"));
    m.def("f_vertex", &f_vertex, py::arg("x"), py::arg("y"));
    m.def("bisect", [](const std::function<double(double)> & fn, double lo, double hi, double width) {
        return bisect(fn, lo, hi, width);
    }, py::arg("fn"), py::arg("lo"), py::arg("hi"), py::arg("width") = 1e-13);
    m.def("solve_x_c", &solve_x_c, py::arg("c"));
    m.def("x1", &x1);
    m.def("x_quarter", &x_quarter);
    m.def("solve_x0_edge", &solve_x0_edge, py::arg("k"), py::arg("variant") = X0Variant::Statement);
    m.def("solve_x0p_edge", &solve_x0p_edge, py::arg("k"));
    m.def("solve_x0_vertex", &solve_x0_vertex, py::arg("k"));
    m.def("solve_x0p_vertex", &solve_x0p_vertex, py::arg("k"));
    m.def("crossover_constants", &crossover_constants, py::arg("k"));
    m.def("classify_vertex", [](std::uint64_t k, std::uint64_t t, std::uint64_t n, Mode mode) {
        return classify_vertex({k, t, n, mode});
    }, py::arg("k"), py::arg("t"), py::arg("n"), py::arg("mode") = Mode::Graph);
    m.def("classify_edge", [](std::uint64_t k, std::uint64_t t, std::uint64_t m_, Mode mode) {
        return classify_edge({k, t, m_, mode});
    }, py::arg("k"), py::arg("t"), py::arg("m"), py::arg("mode") = Mode::Graph);

    // reports, as the same JSON text the command-line tool writes

    m.def("analyze_json", [](const Graph & g, std::uint64_t trials, std::uint64_t seed, std::uint64_t budget) {
        RunConfig config;
        config.subcommand = "analyze";
        config.trials = trials;
        config.seed = seed;
        config.budget = budget;
        return to_json(analyze(g, config), config).dump();
    }, py::arg("g"), py::arg("trials") = 0, py::arg("seed") = 1, py::arg("budget") = kDefaultBudget);
    m.def("verify_json", [](std::size_t gnp_count, std::size_t max_vertices, std::uint64_t seed, std::uint64_t trials) {
        CorpusSpec spec;
        spec.gnp_count = gnp_count;
        spec.max_vertices = max_vertices;
        spec.seed = seed;
        VerifyOptions options;
        options.seed = seed;
        options.trials = trials;
        RunConfig config;
        config.subcommand = "verify";
        config.seed = seed;
        config.trials = trials;
        return verify_json(verify(default_corpus(spec), options), config).dump();
    }, py::arg("gnp_count") = 500, py::arg("max_vertices") = 12, py::arg("seed") = 1, py::arg("trials") = 10'000);
    m.def("sweep_json", [](ReductionKind kind, std::uint64_t k_min, std::uint64_t k_max, std::size_t points, Mode mode) {
        SweepSpec spec;
        spec.kind = kind;
        spec.k_min = k_min;
        spec.k_max = k_max;
        spec.points = points;
        spec.mode = mode;
        RunConfig config;
        config.subcommand = "sweep";
        config.mode = mode;
        return sweep_json(sweep(spec), config).dump();
    }, py::arg("kind"), py::arg("k_min") = 2, py::arg("k_max") = 50, py::arg("points") = 200,
        py::arg("mode") = Mode::Abstract);
}
