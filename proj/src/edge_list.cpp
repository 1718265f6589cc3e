#include "deltared/error.hpp"
#include "deltared/graph.hpp"

#include <charconv>
#include <limits>

using std::size_t;
using std::string;
using std::string_view;

namespace deltared {

namespace
{
    auto trim(string_view s) -> string_view
    {
        while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
            s.remove_prefix(1);
        while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    }

    auto next_token(string_view & s) -> string_view
    {
        s = trim(s);
        size_t end = 0;
        while (end < s.size() && s[end] != ' ' && s[end] != '\t')
            ++end;
        auto token = s.substr(0, end);
        s.remove_prefix(end);
        return token;
    }

    auto parse_index(string_view token, size_t line, const char * what) -> std::uint64_t
    {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec == std::errc::invalid_argument || ptr != token.data() + token.size())
            throw ParseError(line, string("expected a non-negative integer ") + what + ", got '" + string(token) + "'");
        if (ec == std::errc::result_out_of_range)
            throw ParseError(line, string(what) + " overflows");
        return value;
    }
}

auto parse_edge_list(string_view text) -> Graph
{
    std::optional<Graph> g;
    size_t line_no = 0;

    while (! text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        auto line = trim(text.substr(0, nl));
        text.remove_prefix(nl == string_view::npos ? text.size() : nl + 1);

        if (line.empty() || line.front() == '#')
            continue;

        if (! g) {
            auto count = parse_index(next_token(line), line_no, "vertex count");
            if (! trim(line).empty())
                throw ParseError(line_no, "unexpected text after vertex count");
            if (count > std::numeric_limits<Vertex>::max())
                throw ParseError(line_no, "vertex count overflows");
            g.emplace(static_cast<size_t>(count));
            continue;
        }

        auto a = parse_index(next_token(line), line_no, "endpoint");
        auto b = parse_index(next_token(line), line_no, "endpoint");
        if (! trim(line).empty())
            throw ParseError(line_no, "expected exactly two endpoints");
        if (a >= g->vertex_count() || b >= g->vertex_count())
            throw ParseError(line_no, "endpoint index overflow: vertex count is " + std::to_string(g->vertex_count()));
        if (a == b)
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        if (g->has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)))
            throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        g->add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }

    if (! g)
        throw ParseError(0, "missing vertex count header");
    return std::move(*g);
}

auto serialize(const Graph & g) -> string
{
    string out = std::to_string(g.vertex_count()) + "\n";
    for (const auto & e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

}
