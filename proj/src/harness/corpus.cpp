#include "deltared/error.hpp"
#include "deltared/harness.hpp"
#include "deltared/rng.hpp"

#include <fmt/format.h>

#include <charconv>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace deltared {

namespace
{
    auto split_args(string_view s) -> vector<string_view>
    {
        vector<string_view> parts;
        while (true) {
            auto comma = s.find(',');
            parts.push_back(s.substr(0, comma));
            if (comma == string_view::npos)
                break;
            s.remove_prefix(comma + 1);
        }
        return parts;
    }

    auto to_count(string_view s, string_view spec) -> size_t
    {
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw DomainError("bad integer '" + string(s) + "' in generator '" + string(spec) + "'");
        return value;
    }

    auto to_probability(string_view s, string_view spec) -> double
    {
        double value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw DomainError("bad probability '" + string(s) + "' in generator '" + string(spec) + "'");
        return value;
    }
}

auto parse_generator(string_view spec, std::uint64_t seed) -> Graph
{
    auto colon = spec.find(':');
    if (colon == string_view::npos)
        throw DomainError("generator '" + string(spec) + "' must look like family:args");
    auto family = spec.substr(0, colon);
    auto args = split_args(spec.substr(colon + 1));

    auto expect = [&](size_t count) {
        if (args.size() != count)
            throw DomainError("generator '" + string(spec) + "' expects " + std::to_string(count) + " argument(s)");
    };

    if (family == "star") {
        expect(2);
        return gen_star_forest(to_count(args[0], spec), to_count(args[1], spec));
    }
    if (family == "cycle") {
        expect(1);
        return gen_cycle(to_count(args[0], spec));
    }
    if (family == "path") {
        expect(1);
        return gen_path(to_count(args[0], spec));
    }
    if (family == "complete") {
        expect(1);
        return gen_complete(to_count(args[0], spec));
    }
    if (family == "gnp") {
        expect(2);
        return gen_gnp(to_count(args[0], spec), to_probability(args[1], spec), seed);
    }
    throw DomainError("unknown generator family '" + string(family) + "'");
}

auto default_corpus(const CorpusSpec & spec) -> vector<CorpusItem>
{
    vector<CorpusItem> corpus;
    if (spec.max_vertices == 0)
        return corpus;

    for (size_t i = 0; i < spec.gnp_count; ++i) {
        auto rng = Rng::substream(spec.seed, i);
        const size_t n = 1 + rng.below(spec.max_vertices);
        const double p = rng.uniform01();
        const auto graph_seed = rng.next_u64();
        corpus.push_back({fmt::format("gnp:{},{}#{}", n, format_real(p), i), gen_gnp(n, p, graph_seed), graph_seed});
    }

    for (size_t n = 1; n <= spec.max_vertices; ++n)
        corpus.push_back({fmt::format("path:{}", n), gen_path(n), std::nullopt});
    for (size_t n = 3; n <= spec.max_vertices; ++n)
        corpus.push_back({fmt::format("cycle:{}", n), gen_cycle(n), std::nullopt});
    for (size_t k = 1; k + 1 <= spec.max_vertices; ++k)
        for (size_t t = 1; (k + 1) * t <= spec.max_vertices; ++t)
            corpus.push_back({fmt::format("star:{},{}", k, t), gen_star_forest(k, t), std::nullopt});

    return corpus;
}

}
