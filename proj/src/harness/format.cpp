#include "deltared/error.hpp"
#include "deltared/harness.hpp"

#include <fmt/format.h>

#include <cmath>
#include <cstdlib>

using std::string;

namespace deltared {

auto version_string() -> string
{
    return string("deltared ") + DELTARED_VERSION;
}

auto parse_format(std::string_view s) -> OutputFormat
{
    if (s == "json")
        return OutputFormat::Json;
    if (s == "csv")
        return OutputFormat::Csv;
    throw DomainError("unknown format '" + string(s) + "' (expected json or csv)");
}

auto format_real(double x) -> string
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    return fmt::format("{:.12g}", x);
}

auto json_real(double x) -> Json
{
    if (! std::isfinite(x))
        return nullptr;
    // the shortest round-trip form of the parsed 12-digit value is that same string
    return std::strtod(format_real(x).c_str(), nullptr);
}

auto json_real(const std::optional<double> & x) -> Json
{
    return x ? json_real(*x) : Json(nullptr);
}

auto to_json(const RunConfig & c) -> Json
{
    Json j;
    j["subcommand"] = c.subcommand;
    j["input"] = c.input ? Json(*c.input) : Json(nullptr);
    j["generator"] = c.generator ? Json(*c.generator) : Json(nullptr);
    j["seed"] = c.seed;
    j["trials"] = c.trials;
    j["budget"] = c.budget;
    j["format"] = c.format == OutputFormat::Json ? "json" : "csv";
    j["mode"] = string(to_string(c.mode));
    return j;
}

}
