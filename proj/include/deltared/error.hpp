#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deltared {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// Malformed edge-list text. `line()` is 1-based; 0 means the whole document.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string & message) :
        Error("line " + std::to_string(line) + ": " + message),
        _line(line)
    {
    }

    auto line() const noexcept -> std::size_t { return _line; }

private:
    std::size_t _line;
};

}
