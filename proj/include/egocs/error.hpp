#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace egocs {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Arguments violating an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// The operation needs a connected graph.
class DisconnectedGraph : public Error {
public:
    explicit DisconnectedGraph(const std::string &op)
        : Error(op + ": graph is disconnected; extract the largest connected component first") {}
};

// Pearson correlation of a constant vector.
class UndefinedCorrelation : public Error {
public:
    UndefinedCorrelation() : Error("correlation undefined: input has zero variance") {}
};

} // namespace egocs
