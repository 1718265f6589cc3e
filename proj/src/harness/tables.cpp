#include "deltared/error.hpp"
#include "deltared/harness.hpp"

#include <fmt/format.h>

#include <cmath>

using std::string;
using std::uint64_t;
using std::vector;

namespace deltared {

auto thresholds_table(uint64_t k_min, uint64_t k_max) -> vector<CrossoverConstants>
{
    if (k_min < 2 || k_min > k_max)
        throw DomainError("threshold table needs 2 <= k_min <= k_max");
    vector<CrossoverConstants> rows;
    for (auto k = k_min; k <= k_max; ++k)
        rows.push_back(crossover_constants(k));
    return rows;
}

auto thresholds_csv(const vector<CrossoverConstants> & rows) -> string
{
    auto opt = [](const std::optional<double> & x) { return x ? format_real(*x) : string(); };
    string out = "k,x1,x_quarter,x0_vertex,x0p_vertex,x0_edge_statement,x0_edge_proof,x0p_edge\n";
    for (const auto & r : rows)
        out += fmt::format("{},{},{},{},{},{},{},{}\n", r.k, format_real(r.x1), format_real(r.x_quarter),
            opt(r.x0_vertex), opt(r.x0p_vertex), opt(r.x0_edge_statement), opt(r.x0_edge_proof), opt(r.x0p_edge));
    return out;
}

auto thresholds_json(const vector<CrossoverConstants> & rows, const RunConfig & config) -> Json
{
    Json j;
    j["tool"] = version_string();
    j["config"] = to_json(config);
    j["x1"] = json_real(rows.empty() ? x1() : rows.front().x1);
    j["x_quarter"] = json_real(rows.empty() ? x_quarter() : rows.front().x_quarter);
    Json list = Json::array();
    for (const auto & r : rows) {
        Json row;
        row["k"] = r.k;
        row["x0_vertex"] = json_real(r.x0_vertex);
        row["x0p_vertex"] = json_real(r.x0p_vertex);
        row["x0_edge_statement"] = json_real(r.x0_edge_statement);
        row["x0_edge_proof"] = json_real(r.x0_edge_proof);
        row["x0p_edge"] = json_real(r.x0p_edge);
        list.push_back(std::move(row));
    }
    j["rows"] = std::move(list);
    return j;
}

auto sweep(const SweepSpec & spec) -> SweepResult
{
    if (spec.points < 2)
        throw DomainError("sweep needs at least two grid points");
    if (spec.t < 1)
        throw DomainError("sweep needs t >= 1");
    const bool edge = spec.kind == ReductionKind::Edge;
    if (spec.k_min > spec.k_max || spec.k_min < (edge ? 2u : 1u))
        throw DomainError(edge ? "edge sweep needs 2 <= k_min <= k_max" : "vertex sweep needs 1 <= k_min <= k_max");

    SweepResult result;
    result.spec = spec;

    for (auto k = spec.k_min; k <= spec.k_max; ++k) {
        const double kd = static_cast<double>(k);
        double x_max;
        if (edge)
            x_max = spec.mode == Mode::Graph ? 2.0 : 2.0 * kd;
        else
            x_max = kd + 1.0;

        const double full = edge ? kd * static_cast<double>(spec.t) : (kd + 1.0) * static_cast<double>(spec.t);
        const auto grid = linear_grid(1.0, x_max, spec.points);
        std::optional<uint64_t> previous;
        for (auto x : grid) {
            const auto size = static_cast<uint64_t>(std::llround(full / x));
            if (size == 0 || size == previous)
                continue;
            previous = size;

            SweepRow row;
            row.k = k;
            row.t = spec.t;
            row.size = size;
            row.classification = edge ? classify_edge({k, spec.t, size, spec.mode})
                                      : classify_vertex({k, spec.t, size, spec.mode});

            switch (row.classification.region) {
                case Region::TheoremB1: ++result.theorem_b1; break;
                case Region::TheoremB2: ++result.theorem_b2; break;
                case Region::Equal: ++result.equal; break;
                case Region::Gap: ++result.gap; break;
            }
            if (! row.classification.agrees)
                ++result.disagreements;
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

auto sweep_csv(const SweepResult & r) -> string
{
    const bool edge = r.spec.kind == ReductionKind::Edge;
    string out = fmt::format("kind,mode,k,t,{},x,b1,b2,verdict,region,agrees\n", edge ? "m" : "n");
    for (const auto & row : r.rows) {
        const auto & c = row.classification;
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", to_string(r.spec.kind), to_string(r.spec.mode),
            row.k, row.t, row.size, format_real(c.x), format_real(c.report.b1),
            c.report.b2 ? format_real(*c.report.b2) : "", to_string(c.report.verdict), to_string(c.region),
            c.agrees ? "true" : "false");
    }
    return out;
}

auto sweep_json(const SweepResult & r, const RunConfig & config) -> Json
{
    Json j;
    j["tool"] = version_string();
    j["config"] = to_json(config);
    j["kind"] = string(to_string(r.spec.kind));
    j["mode"] = string(to_string(r.spec.mode));
    j["k_min"] = r.spec.k_min;
    j["k_max"] = r.spec.k_max;
    j["points"] = r.spec.points;
    j["t"] = r.spec.t;
    j["summary"] = {
        {"rows", r.rows.size()},
        {"TheoremB1", r.theorem_b1},
        {"TheoremB2", r.theorem_b2},
        {"Equal", r.equal},
        {"Gap", r.gap},
        {"disagreements", r.disagreements},
    };
    Json rows = Json::array();
    for (const auto & row : r.rows) {
        const auto & c = row.classification;
        Json o;
        o["k"] = row.k;
        o["t"] = row.t;
        o[r.spec.kind == ReductionKind::Edge ? "m" : "n"] = row.size;
        o["x"] = json_real(c.x);
        o["b1"] = json_real(c.report.b1);
        o["b2"] = json_real(c.report.b2);
        o["verdict"] = string(to_string(c.report.verdict));
        o["region"] = string(to_string(c.region));
        o["agrees"] = c.agrees;
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    return j;
}

}
