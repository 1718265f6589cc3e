#pragma once

#include "deltared/bounds.hpp"
#include "deltared/exact.hpp"
#include "deltared/graph.hpp"
#include "deltared/randomized.hpp"
#include "deltared/thresholds.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace deltared {

using Json = nlohmann::ordered_json;

auto version_string() -> std::string;

enum class OutputFormat
{
    Json,
    Csv
};

auto parse_format(std::string_view) -> OutputFormat;

/// Everything a run depends on; echoed into every report.
struct RunConfig
{
    std::string subcommand;
    std::optional<std::string> input;
    std::optional<std::string> generator;
    std::uint64_t seed = 1;
    std::uint64_t trials = 0;
    std::uint64_t budget = kDefaultBudget;
    OutputFormat format = OutputFormat::Json;
    Mode mode = Mode::Graph;
};

auto to_json(const RunConfig &) -> Json;

/// Real number in the fixed 12-significant-digit form used by every report.
auto format_real(double x) -> std::string;

/// Same rounding as format_real, as a JSON number; null when not finite.
auto json_real(double x) -> Json;
auto json_real(const std::optional<double> & x) -> Json;

// corpus

struct CorpusItem
{
    std::string name;
    Graph graph;
    /// Seed the graph was generated from, for random families.
    std::optional<std::uint64_t> seed;
};

/// Builds a graph from "star:k,t", "cycle:n", "path:n", "complete:n" or "gnp:n,p".
auto parse_generator(std::string_view spec, std::uint64_t seed) -> Graph;

struct CorpusSpec
{
    std::uint64_t seed = 1;
    std::size_t gnp_count = 500;
    /// Largest vertex count of any generated graph.
    std::size_t max_vertices = 12;
};

/// `gnp_count` random graphs (item i: n, p and graph seed drawn from
/// Rng::substream(seed, i)), then every path, cycle and star forest with at
/// most `max_vertices` vertices.
auto default_corpus(const CorpusSpec &) -> std::vector<CorpusItem>;

// analysis

struct AnalysisReport
{
    GraphStats stats;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    ExactResult lambda;
    ExactResult lambda_e;
    std::optional<Classification> vertex;
    std::optional<Classification> edge;
    /// Present only for k = 1, where the edge classifier does not apply.
    std::optional<BoundReport> edge_k1;
    std::optional<MonteCarloReport> vertex_sampling;
    std::optional<MonteCarloReport> edge_sampling;
    std::vector<std::string> problems;

    auto consistent() const -> bool { return problems.empty(); }
    auto conclusive() const -> bool
    {
        return lambda.status == SearchStatus::Optimal && lambda_e.status == SearchStatus::Optimal;
    }
};

/// Exact values, every applicable bound, verdicts and region labels, and
/// (when trials > 0) sampling at the minimising p. `problems` lists every
/// internal-consistency violation found.
auto analyze(const Graph & g, const RunConfig & config) -> AnalysisReport;

auto to_json(const AnalysisReport &, const RunConfig &) -> Json;
auto to_csv(const AnalysisReport &, const RunConfig &) -> std::string;

auto certificate_json(const ReductionCertificate &) -> Json;
auto exact_json(const ExactResult &) -> Json;

// tables

auto thresholds_table(std::uint64_t k_min, std::uint64_t k_max) -> std::vector<CrossoverConstants>;
auto thresholds_csv(const std::vector<CrossoverConstants> &) -> std::string;
auto thresholds_json(const std::vector<CrossoverConstants> &, const RunConfig &) -> Json;

struct SweepSpec
{
    ReductionKind kind = ReductionKind::Edge;
    std::uint64_t k_min = 2;
    std::uint64_t k_max = 50;
    std::size_t points = 200;
    Mode mode = Mode::Abstract;
    /// t used to turn each grid x into an integer n or m.
    std::uint64_t t = 10'000;
};

struct SweepRow
{
    std::uint64_t k = 0;
    std::uint64_t t = 0;
    /// n for vertex sweeps, m for edge sweeps.
    std::uint64_t size = 0;
    Classification classification;
};

struct SweepResult
{
    SweepSpec spec;
    std::vector<SweepRow> rows;
    std::size_t theorem_b1 = 0;
    std::size_t theorem_b2 = 0;
    std::size_t equal = 0;
    std::size_t gap = 0;
    std::size_t disagreements = 0;
};

/// For each k, `points` values of x evenly spaced on [1, X] with X = 2 (edge,
/// graph mode), 2k (edge, abstract) or k+1 (vertex), rounded to integer sizes.
auto sweep(const SweepSpec &) -> SweepResult;
auto sweep_csv(const SweepResult &) -> std::string;
auto sweep_json(const SweepResult &, const RunConfig &) -> Json;

// verification

struct CheckResult
{
    std::string name;
    bool passed = true;
    std::string detail;
    /// Minimal failing instance: serialised graph, with its seed when random.
    std::optional<std::string> reproducer;
    /// The failure came from an exhausted search budget.
    bool budget_exhausted = false;
};

struct VerifyOptions
{
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 1;
    /// Cross-check branch and bound against exhaustive search up to this many vertices.
    std::size_t exhaustive_max_vertices = 10;
    /// Mutation hook: "v1", "v2", "e1" or "e2" halves that bound in the validity check.
    std::optional<std::string> broken_bound;
};

/// Runs the named checks in order and stops at the first failure.
/// Throws DomainError("no instances") on an empty corpus.
auto verify(const std::vector<CorpusItem> & corpus, const VerifyOptions &) -> std::vector<CheckResult>;

auto verify_json(const std::vector<CheckResult> &, const RunConfig &) -> Json;

}
