#include <deltared/error.hpp>
#include <deltared/harness.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace deltared;
using std::string;

namespace
{
    enum ExitCode
    {
        Pass = 0,
        CheckFailure = 1,
        InputError = 2,
        BudgetExhausted = 3
    };

    struct Options
    {
        std::optional<string> input;
        std::optional<string> generator;
        std::uint64_t seed = 1;
        std::uint64_t trials = 0;
        std::uint64_t budget = kDefaultBudget;
        string format = "json";
        string mode = "graph";
        std::optional<string> out;

        std::uint64_t k_min = 2;
        std::uint64_t k_max = 10;
        string kind = "edge";
        std::size_t points = 200;
        std::uint64_t t = 10'000;
        string strategy = "bb";

        string corpus = "default";
        std::size_t gnp_count = 500;
        std::size_t max_n = 12;
        std::optional<string> break_bound;
    };

    auto config_for(const string & subcommand, const Options & o) -> RunConfig
    {
        RunConfig c;
        c.subcommand = subcommand;
        c.input = o.input;
        c.generator = o.generator;
        c.seed = o.seed;
        c.trials = o.trials;
        c.budget = o.budget;
        c.format = parse_format(o.format);
        c.mode = parse_mode(o.mode);
        return c;
    }

    auto load_graph(const Options & o) -> Graph
    {
        if (o.input && o.generator)
            throw DomainError("give either --input or --generator, not both");
        if (o.generator)
            return parse_generator(*o.generator, o.seed);
        if (! o.input)
            throw DomainError("a graph is required: use --input FILE or --generator SPEC");
        std::ifstream in(*o.input, std::ios::binary);
        if (! in)
            throw DomainError("cannot open '" + *o.input + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return parse_edge_list(text.str());
    }

    auto emit(const Options & o, const string & text) -> void
    {
        if (! o.out) {
            std::cout << text;
            return;
        }
        std::ofstream out(*o.out, std::ios::binary);
        if (! out)
            throw DomainError("cannot write '" + *o.out + "'");
        out << text;
    }

    auto emit(const Options & o, const Json & j) -> void
    {
        emit(o, j.dump(2) + "\n");
    }

    // leading comment so csv tables still carry the tool version and run configuration
    auto csv_preamble(const RunConfig & config) -> string
    {
        return "# " + version_string() + " " + to_json(config).dump() + "\n";
    }

    auto csv_field(const string & s) -> string
    {
        if (s.find_first_of(",\"\n") == string::npos)
            return s;
        string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + "\"";
    }

    auto run_analyze(const Options & o) -> int
    {
        auto config = config_for("analyze", o);
        auto report = analyze(load_graph(o), config);
        if (config.format == OutputFormat::Json)
            emit(o, to_json(report, config));
        else
            emit(o, to_csv(report, config));
        if (! report.consistent())
            return CheckFailure;
        return report.conclusive() ? Pass : BudgetExhausted;
    }

    auto run_solve(const Options & o) -> int
    {
        auto config = config_for("solve", o);
        if (o.strategy != "bb" && o.strategy != "exhaustive")
            throw DomainError("unknown strategy '" + o.strategy + "' (expected bb or exhaustive)");
        const auto strategy = o.strategy == "bb" ? SearchStrategy::BranchAndBound : SearchStrategy::Exhaustive;
        const bool vertex = o.kind == "vertex" || o.kind == "both";
        const bool edge = o.kind == "edge" || o.kind == "both";
        if (! vertex && ! edge)
            throw DomainError("unknown kind '" + o.kind + "' (expected vertex, edge or both)");

        auto g = load_graph(o);
        std::vector<ExactResult> results;
        if (vertex)
            results.push_back(lambda_exact(g, o.budget, strategy));
        if (edge)
            results.push_back(lambda_e_exact(g, o.budget, strategy));

        if (config.format == OutputFormat::Json) {
            Json j;
            j["tool"] = version_string();
            j["config"] = to_json(config);
            j["strategy"] = o.strategy;
            for (const auto & r : results)
                j[r.certificate.kind == ReductionKind::Vertex ? "lambda" : "lambda_e"] = exact_json(r);
            emit(o, j);
        } else {
            string out = csv_preamble(config) + "kind,status,value,lower_bound,sets_examined,verified,removed\n";
            for (const auto & r : results) {
                string removed;
                if (r.certificate.kind == ReductionKind::Vertex)
                    for (auto v : r.certificate.vertices)
                        removed += (removed.empty() ? "" : " ") + std::to_string(v);
                else
                    for (const auto & e : r.certificate.edges)
                        removed += (removed.empty() ? "" : " ") + fmt::format("{}-{}", e.u, e.v);
                out += fmt::format("{},{},{},{},{},{},{}\n", to_string(r.certificate.kind),
                    r.status == SearchStatus::Optimal ? "optimal" : "inconclusive", r.value, r.lower_bound,
                    r.sets_examined, r.certificate.verified ? "true" : "false", removed);
            }
            emit(o, out);
        }
        for (const auto & r : results)
            if (r.status != SearchStatus::Optimal)
                return BudgetExhausted;
        return Pass;
    }

    auto run_generate(const Options & o) -> int
    {
        if (! o.generator)
            throw DomainError("generate needs --generator SPEC");
        auto config = config_for("generate", o);
        auto g = parse_generator(*o.generator, o.seed);
        if (config.format == OutputFormat::Json) {
            Json j;
            j["tool"] = version_string();
            j["config"] = to_json(config);
            j["vertex_count"] = g.vertex_count();
            Json edges = Json::array();
            for (const auto & e : g.edges())
                edges.push_back(Json::array({e.u, e.v}));
            j["edges"] = std::move(edges);
            emit(o, j);
        } else {
            // the edge-list format skips comment lines, so the output reparses as is
            emit(o, "# " + version_string() + " " + to_json(config).dump() + "\n" + serialize(g));
        }
        return Pass;
    }

    auto run_thresholds(const Options & o) -> int
    {
        auto config = config_for("thresholds", o);
        auto rows = thresholds_table(o.k_min, o.k_max);
        if (config.format == OutputFormat::Json)
            emit(o, thresholds_json(rows, config));
        else
            emit(o, csv_preamble(config) + thresholds_csv(rows));
        return Pass;
    }

    auto run_sweep(const Options & o) -> int
    {
        auto config = config_for("sweep", o);
        SweepSpec spec;
        if (o.kind == "vertex")
            spec.kind = ReductionKind::Vertex;
        else if (o.kind == "edge")
            spec.kind = ReductionKind::Edge;
        else
            throw DomainError("unknown kind '" + o.kind + "' (expected vertex or edge)");
        spec.k_min = o.k_min;
        spec.k_max = o.k_max;
        spec.points = o.points;
        spec.mode = config.mode;
        spec.t = o.t;
        auto result = sweep(spec);
        if (config.format == OutputFormat::Json)
            emit(o, sweep_json(result, config));
        else
            emit(o, csv_preamble(config) + sweep_csv(result));
        return result.disagreements == 0 ? Pass : CheckFailure;
    }

    auto run_verify(const Options & o) -> int
    {
        auto config = config_for("verify", o);
        std::vector<CorpusItem> corpus;
        if (o.corpus == "default") {
            CorpusSpec spec;
            spec.seed = o.seed;
            spec.gnp_count = o.gnp_count;
            spec.max_vertices = o.max_n;
            corpus = default_corpus(spec);
        } else if (o.corpus != "none") {
            throw DomainError("unknown corpus '" + o.corpus + "' (expected default or none)");
        }
        if (o.input || o.generator)
            corpus.push_back({o.input ? *o.input : *o.generator, load_graph(o),
                o.generator ? std::optional(o.seed) : std::nullopt});

        VerifyOptions options;
        options.budget = o.budget;
        options.seed = o.seed;
        if (o.trials > 0)
            options.trials = o.trials;
        config.trials = options.trials;
        options.broken_bound = o.break_bound;
        if (o.break_bound && *o.break_bound != "v1" && *o.break_bound != "v2" && *o.break_bound != "e1"
            && *o.break_bound != "e2")
            throw DomainError("--break-bound expects v1, v2, e1 or e2");

        auto results = verify(corpus, options);
        if (config.format == OutputFormat::Json) {
            emit(o, verify_json(results, config));
        } else {
            string out = csv_preamble(config) + "name,passed,budget_exhausted,detail,reproducer\n";
            for (const auto & r : results)
                out += fmt::format("{},{},{},{},{}\n", r.name, r.passed ? "true" : "false",
                    r.budget_exhausted ? "true" : "false", csv_field(r.detail), csv_field(r.reproducer.value_or("")));
            emit(o, out);
        }
        const auto & last = results.back();
        if (last.passed)
            return Pass;
        std::cerr << "check '" << last.name << "' failed: " << last.detail << "\n";
        if (last.reproducer)
            std::cerr << last.reproducer.value();
        return last.budget_exhausted ? BudgetExhausted : CheckFailure;
    }

    auto add_output(CLI::App * cmd, Options & o) -> void
    {
        cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", o.out, "Write the report to this file instead of stdout");
    }

    auto add_graph(CLI::App * cmd, Options & o) -> void
    {
        cmd->add_option("--input", o.input, "Edge-list file");
        cmd->add_option("--generator", o.generator, "star:k,t | cycle:n | path:n | complete:n | gnp:n,p");
        cmd->add_option("--seed", o.seed, "Seed for random generators and sampling");
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Exact and bounded minimum max-degree-reducing vertex and edge sets"};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1);

    Options o;
    std::function<int(const Options &)> action;

    auto analyze_cmd = app.add_subcommand("analyze", "Exact values, bounds and region labels for one graph");
    add_graph(analyze_cmd, o);
    add_output(analyze_cmd, o);
    analyze_cmd->add_option("--trials", o.trials, "Monte Carlo trials at the minimising p (0 disables)");
    analyze_cmd->add_option("--budget", o.budget, "Maximum candidate sets examined per exact search");
    analyze_cmd->add_option("--mode", o.mode, "graph or abstract")->check(CLI::IsMember({"graph", "abstract"}));
    analyze_cmd->callback([&] { action = run_analyze; });

    auto solve_cmd = app.add_subcommand("solve", "Minimum reducing vertex or edge set with certificate");
    add_graph(solve_cmd, o);
    add_output(solve_cmd, o);
    solve_cmd->add_option("--budget", o.budget, "Maximum candidate sets examined");
    solve_cmd->add_option("--kind", o.kind, "vertex, edge or both");
    solve_cmd->add_option("--strategy", o.strategy, "bb or exhaustive");
    solve_cmd->callback([&] { action = run_solve; });
    solve_cmd->preparse_callback([&](std::size_t) { o.kind = "both"; });

    auto generate_cmd = app.add_subcommand("generate", "Write a generated graph as an edge list");
    generate_cmd->add_option("--generator", o.generator, "star:k,t | cycle:n | path:n | complete:n | gnp:n,p")->required();
    generate_cmd->add_option("--seed", o.seed, "Seed for random generators");
    generate_cmd->add_option("--out", o.out, "Write to this file instead of stdout");
    generate_cmd->add_option("--format", o.format, "csv writes the edge list, json an edge array")
        ->check(CLI::IsMember({"json", "csv"}));
    generate_cmd->preparse_callback([&](std::size_t) { o.format = "csv"; });
    generate_cmd->callback([&] { action = run_generate; });

    auto thresholds_cmd = app.add_subcommand("thresholds", "Crossover constants for a range of k");
    add_output(thresholds_cmd, o);
    thresholds_cmd->add_option("--k-min", o.k_min, "Smallest k (at least 2)");
    thresholds_cmd->add_option("--k-max", o.k_max, "Largest k");
    thresholds_cmd->callback([&] { action = run_thresholds; });

    auto sweep_cmd = app.add_subcommand("sweep", "Region labels against direct comparison over an x grid");
    add_output(sweep_cmd, o);
    sweep_cmd->add_option("--kind", o.kind, "vertex or edge");
    sweep_cmd->add_option("--k-min", o.k_min, "Smallest k");
    sweep_cmd->add_option("--k-max", o.k_max, "Largest k");
    sweep_cmd->add_option("--points", o.points, "Grid points per k");
    sweep_cmd->add_option("--t", o.t, "t used to round x to an integer n or m");
    sweep_cmd->add_option("--mode", o.mode, "graph or abstract")->check(CLI::IsMember({"graph", "abstract"}));
    sweep_cmd->preparse_callback([&](std::size_t) {
        o.mode = "abstract";
        o.k_max = 50;
    });
    sweep_cmd->callback([&] { action = run_sweep; });

    auto verify_cmd = app.add_subcommand("verify", "Run every consistency check over a graph corpus");
    add_graph(verify_cmd, o);
    add_output(verify_cmd, o);
    verify_cmd->add_option("--trials", o.trials, "Monte Carlo trials for the sampling checks");
    verify_cmd->add_option("--budget", o.budget, "Maximum candidate sets examined per exact search");
    verify_cmd->add_option("--corpus", o.corpus, "default or none");
    verify_cmd->add_option("--gnp-count", o.gnp_count, "Random graphs in the default corpus");
    verify_cmd->add_option("--max-n", o.max_n, "Largest vertex count in the default corpus");
    verify_cmd->add_option("--break-bound", o.break_bound, "Halve bound v1, v2, e1 or e2 (harness self-test)");
    verify_cmd->callback([&] { action = run_verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? Pass : InputError;
    }

    try {
        return action(o);
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    }
}
