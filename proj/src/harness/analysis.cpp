#include "deltared/error.hpp"
#include "deltared/harness.hpp"

#include <fmt/format.h>

#include <cmath>

using std::string;

namespace deltared {

namespace
{
    // λ values are integers, so the bound may be floored; the small offset
    // absorbs rounding in bounds that are integers in exact arithmetic.
    auto floor_bound(double b) -> double
    {
        return std::floor(b + 1e-9);
    }

    auto check_bound(AnalysisReport & r, const char * name, std::size_t exact, double bound) -> void
    {
        if (static_cast<double>(exact) > floor_bound(bound))
            r.problems.push_back(fmt::format("{} = {} exceeds floor of bound {}", name, exact, format_real(bound)));
    }
}

auto analyze(const Graph & g, const RunConfig & config) -> AnalysisReport
{
    if (g.vertex_count() == 0)
        throw DomainError("no vertices");

    AnalysisReport r;
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.stats = stats(g);
    const auto & s = r.stats;

    if (s.n > (s.k + 1) * s.t)
        r.problems.push_back("n > (k+1)t");
    if (s.m > s.k * s.t)
        r.problems.push_back("m > kt");
    if (2 * s.m < s.k * s.t)
        r.problems.push_back("2m < kt");

    r.lambda = lambda_exact(g, config.budget);
    r.lambda_e = lambda_e_exact(g, config.budget);
    if (! r.lambda.certificate.verified)
        r.problems.push_back("vertex certificate does not verify");
    if (! r.lambda_e.certificate.verified)
        r.problems.push_back("edge certificate does not verify");

    if (s.k >= 1) {
        r.vertex = classify_vertex({s.k, s.t, s.n, Mode::Graph});
        if (s.k >= 2)
            r.edge = classify_edge({s.k, s.t, s.m, Mode::Graph});
        else
            r.edge_k1 = compare_edge({s.k, s.t, s.m, Mode::Graph});

        const auto & vb = r.vertex->report;
        const auto & eb = r.edge ? r.edge->report : *r.edge_k1;

        // an inconclusive search still yields a feasible set, which is an upper bound
        // on the exact value; comparing it would flag bound slack, not a violation
        if (r.lambda.status == SearchStatus::Optimal) {
            check_bound(r, "lambda", r.lambda.value, vb.b1);
            check_bound(r, "lambda", r.lambda.value, *vb.b2);
        }
        if (r.lambda_e.status == SearchStatus::Optimal) {
            check_bound(r, "lambda_e", r.lambda_e.value, eb.b1);
            if (eb.b2)
                check_bound(r, "lambda_e", r.lambda_e.value, *eb.b2);
        }

        if (! r.vertex->agrees)
            r.problems.push_back("vertex region label disagrees with direct comparison");
        if (r.edge && ! r.edge->agrees)
            r.problems.push_back("edge region label disagrees with direct comparison");
        if (r.edge && r.edge->region != Region::TheoremB1 && r.edge->region != Region::Equal)
            r.problems.push_back("graph-derived edge parameters fall outside the b1 region");

        if (config.trials > 0) {
            r.vertex_sampling = monte_carlo(g, ReductionKind::Vertex, *vb.p_star, config.trials, config.seed);
            if (! r.vertex_sampling->all_verified)
                r.problems.push_back("a sampled vertex set is not reducing");
            if (r.lambda.status == SearchStatus::Optimal && r.vertex_sampling->min_size < r.lambda.value)
                r.problems.push_back("a sampled vertex set beats lambda");
            if (eb.p_star) {
                r.edge_sampling = monte_carlo(g, ReductionKind::Edge, *eb.p_star, config.trials, config.seed);
                if (! r.edge_sampling->all_verified)
                    r.problems.push_back("a sampled edge set is not reducing");
                if (r.lambda_e.status == SearchStatus::Optimal && r.edge_sampling->min_size < r.lambda_e.value)
                    r.problems.push_back("a sampled edge set beats lambda_e");
            }
        }
    }
    return r;
}

auto certificate_json(const ReductionCertificate & c) -> Json
{
    Json j;
    j["kind"] = string(to_string(c.kind));
    Json removed = Json::array();
    if (c.kind == ReductionKind::Vertex)
        for (auto v : c.vertices)
            removed.push_back(v);
    else
        for (const auto & e : c.edges)
            removed.push_back(Json::array({e.u, e.v}));
    j["removed"] = std::move(removed);
    j["resulting_max_degree"] = c.resulting_max_degree;
    j["verified"] = c.verified;
    return j;
}

auto exact_json(const ExactResult & r) -> Json
{
    Json j;
    j["status"] = r.status == SearchStatus::Optimal ? "optimal" : "inconclusive";
    j["value"] = r.value;
    j["lower_bound"] = r.lower_bound;
    j["sets_examined"] = r.sets_examined;
    j["certificate"] = certificate_json(r.certificate);
    return j;
}

namespace
{
    auto report_json(const BoundReport & b) -> Json
    {
        Json j;
        j["mode"] = string(to_string(b.mode));
        j["realizable"] = b.realizable;
        j["b1"] = json_real(b.b1);
        j["b2"] = json_real(b.b2);
        if (b.ln_bound)
            j["ln_bound"] = json_real(b.ln_bound);
        j["p_star"] = json_real(b.p_star);
        j["u_at_pstar"] = json_real(b.u_at_pstar);
        j["verdict"] = string(to_string(b.verdict));
        return j;
    }

    auto classification_json(const Classification & c) -> Json
    {
        Json j = report_json(c.report);
        j["x"] = json_real(c.x);
        j["region"] = string(to_string(c.region));
        j["lower_threshold"] = json_real(c.lower_threshold);
        j["upper_threshold"] = json_real(c.upper_threshold);
        j["agrees"] = c.agrees;
        return j;
    }

    auto sampling_json(const MonteCarloReport & m) -> Json
    {
        Json j;
        j["kind"] = string(to_string(m.kind));
        j["trials"] = m.trials;
        j["seed"] = m.seed;
        j["p"] = json_real(m.p);
        j["empirical_mean"] = json_real(m.empirical_mean);
        j["empirical_std"] = m.std_defined ? json_real(m.empirical_std) : Json(nullptr);
        j["expected"] = json_real(m.expected);
        j["z_score"] = json_real(m.z_score);
        j["min_size"] = m.min_size;
        j["max_size"] = m.max_size;
        j["all_verified"] = m.all_verified;
        return j;
    }

    auto slack(const ExactResult & r, const std::optional<double> & bound) -> Json
    {
        if (! bound || r.status != SearchStatus::Optimal)
            return nullptr;
        return json_real(*bound - static_cast<double>(r.value));
    }
}

auto to_json(const AnalysisReport & r, const RunConfig & config) -> Json
{
    Json j;
    j["tool"] = version_string();
    j["config"] = to_json(config);
    j["graph"] = {{"vertex_count", r.vertex_count}, {"edge_count", r.edge_count}};
    j["stats"] = {{"k", r.stats.k}, {"t", r.stats.t}, {"n", r.stats.n}, {"m", r.stats.m}};
    j["lambda"] = exact_json(r.lambda);
    j["lambda_e"] = exact_json(r.lambda_e);
    j["vertex_bounds"] = r.vertex ? classification_json(*r.vertex) : Json(nullptr);
    if (r.edge)
        j["edge_bounds"] = classification_json(*r.edge);
    else if (r.edge_k1)
        j["edge_bounds"] = report_json(*r.edge_k1);
    else
        j["edge_bounds"] = nullptr;

    const BoundReport * vb = r.vertex ? &r.vertex->report : nullptr;
    const BoundReport * eb = r.edge ? &r.edge->report : (r.edge_k1 ? &*r.edge_k1 : nullptr);
    Json sl;
    sl["v1"] = vb ? slack(r.lambda, vb->b1) : Json(nullptr);
    sl["v2"] = vb ? slack(r.lambda, vb->b2) : Json(nullptr);
    sl["v_ln"] = vb ? slack(r.lambda, vb->ln_bound) : Json(nullptr);
    sl["e1"] = eb ? slack(r.lambda_e, eb->b1) : Json(nullptr);
    sl["e2"] = eb ? slack(r.lambda_e, eb->b2) : Json(nullptr);
    j["slack"] = std::move(sl);

    if (r.vertex_sampling)
        j["vertex_sampling"] = sampling_json(*r.vertex_sampling);
    if (r.edge_sampling)
        j["edge_sampling"] = sampling_json(*r.edge_sampling);

    j["consistent"] = r.consistent();
    j["problems"] = r.problems;
    return j;
}

auto to_csv(const AnalysisReport & r, const RunConfig & config) -> string
{
    auto opt = [](const std::optional<double> & x) { return x ? format_real(*x) : string(); };
    const BoundReport * vb = r.vertex ? &r.vertex->report : nullptr;
    const BoundReport * eb = r.edge ? &r.edge->report : (r.edge_k1 ? &*r.edge_k1 : nullptr);

    string out = "tool,subcommand,input,generator,seed,trials,budget,mode,vertex_count,edge_count,k,t,n,m,lambda,lambda_status,lambda_e,lambda_e_status,"
                 "b1_v,b2_v,ln_v,verdict_v,region_v,b1_e,b2_e,verdict_e,region_e,consistent\n";
    out += fmt::format("{},{},{},{},{},{},{},{},", version_string(), config.subcommand,
        config.input.value_or(""), config.generator.value_or(""), config.seed, config.trials, config.budget,
        to_string(config.mode));
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},", r.vertex_count, r.edge_count,
        r.stats.k, r.stats.t, r.stats.n, r.stats.m,
        r.lambda.value, r.lambda.status == SearchStatus::Optimal ? "optimal" : "inconclusive",
        r.lambda_e.value, r.lambda_e.status == SearchStatus::Optimal ? "optimal" : "inconclusive");
    out += fmt::format("{},{},{},{},{},",
        vb ? format_real(vb->b1) : "", vb ? opt(vb->b2) : "", vb ? opt(vb->ln_bound) : "",
        vb ? string(to_string(vb->verdict)) : "", r.vertex ? string(to_string(r.vertex->region)) : "");
    out += fmt::format("{},{},{},{},{}\n",
        eb ? format_real(eb->b1) : "", eb ? opt(eb->b2) : "",
        eb ? string(to_string(eb->verdict)) : "", r.edge ? string(to_string(r.edge->region)) : "",
        r.consistent() ? "true" : "false");
    return out;
}

}
