#pragma once

#include <stdexcept>
#include <string>

namespace lefdt {

// Input that parses but violates a documented precondition (bad adjacency kind,
// dimension guard, malformed map, ...).  CLI exit code 2.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file (JSON syntax, schema, unsorted point list, ...).  CLI exit code 3.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration exceeded its configured resource budget.  No partial results are
// returned past this point.  CLI exit code 4.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A theorem the implementation relies on was violated at runtime (e.g. an induced
// cubical map failing the chain-map identity).  Always a bug or a consequence of
// overriding a guard; never caught internally.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lefdt
