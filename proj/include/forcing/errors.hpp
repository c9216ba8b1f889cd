#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace forcing {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by exact solvers when the projected number of candidate subsets
/// exceeds the configured work budget. `certified_lower` is the smallest
/// cardinality that was not ruled out: every smaller cardinality was fully
/// swept and failed.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(int certified_lower, std::uint64_t work_done,
                        std::uint64_t budget)
        : Error("work budget exceeded (certified lower bound " +
                std::to_string(certified_lower) + ", work " +
                std::to_string(work_done) + ", budget " +
                std::to_string(budget) + ")"),
          certified_lower(certified_lower),
          work_done(work_done),
          budget(budget) {}

    int certified_lower;
    std::uint64_t work_done;
    std::uint64_t budget;
};

/// A precondition that makes the requested quantity undefined
/// (e.g. total domination of a graph with an isolated vertex).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// A matrix is non-square, combinatorially asymmetric, or its nonzero
/// pattern does not match the expected graph.
class PatternError : public Error {
public:
    using Error::Error;
};

/// A matrix required to be symmetric is not.
class SymmetryError : public Error {
public:
    using Error::Error;
};

/// A nullity certificate failed one of its validity checks.
class CertificateError : public Error {
public:
    using Error::Error;
};

/// Parameters outside the range a construction supports.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (edge lists, graph expressions).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace forcing
