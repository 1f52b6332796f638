// Error types shared across the library. Every failure mode that callers
// are expected to distinguish gets its own exception class; the CLI maps
// them onto exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace eac {

/// Two values from different ring contexts were combined.
class RingMismatchError : public std::runtime_error {
public:
    explicit RingMismatchError(const std::string& what)
        : std::runtime_error(what) {}
};

/// A configurable work limit (Groebner reduction steps) was exceeded.
/// Never silent: callers either handle it or the process exits with a
/// dedicated code.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what)
        : std::runtime_error(what) {}
};

/// An operation's stated precondition does not hold for the given input.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Two internally redundant computations disagreed. Indicates an engine
/// bug, not a user error.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& what)
        : std::logic_error(what) {}
};

/// Lexical, syntactic or semantic error in an input document.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " at line " + std::to_string(line) +
                             ", column " + std::to_string(column)),
          line(line), column(column) {}
    int line;
    int column;
};

} // namespace eac
