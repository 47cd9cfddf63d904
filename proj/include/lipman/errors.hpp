#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lipman {

// Base for everything thrown by the library.  Catch this at the CLI
// boundary; catch the concrete types in tests.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- input / validation failures -----------------------------------------

class NonSymmetricError : public Error {
public:
    NonSymmetricError(std::size_t i, std::size_t j)
        : Error("matrix is not symmetric at (" + std::to_string(i) + "," +
                std::to_string(j) + ")"),
          i(i), j(j) {}
    std::size_t i, j;
};

class NonNegativeDiagonalError : public Error {
public:
    explicit NonNegativeDiagonalError(std::size_t i)
        : Error("diagonal entry " + std::to_string(i) +
                " must be <= -1 (self-intersection is negative)"),
          index(i) {}
    std::size_t index;
};

class NegativeOffDiagonalError : public Error {
public:
    NegativeOffDiagonalError(std::size_t i, std::size_t j)
        : Error("off-diagonal entry (" + std::to_string(i) + "," +
                std::to_string(j) +
                ") must be >= 0 (distinct components meet non-negatively)"),
          i(i), j(j) {}
    std::size_t i, j;
};

class NotNegativeDefiniteError : public Error {
public:
    explicit NotNegativeDefiniteError(std::size_t k)
        : Error("matrix is not negative definite (leading principal minor " +
                std::to_string(k) + " breaks the sign alternation)"),
          minor_index(k) {}
    std::size_t minor_index;  // 1-based index of the failing minor
};

class DisconnectedError : public Error {
public:
    explicit DisconnectedError(std::vector<std::vector<std::size_t>> parts)
        : Error("intersection graph is disconnected (" +
                std::to_string(parts.size()) + " components)"),
          components(std::move(parts)) {}
    std::vector<std::vector<std::size_t>> components;  // 0-based indices
};

class SingularMatrixError : public Error {
public:
    SingularMatrixError() : Error("matrix is singular") {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

// --- engine / pipeline failures ------------------------------------------

class ResourceLimitError : public Error {
public:
    ResourceLimitError(unsigned long long expansions, unsigned long long budget)
        : Error("node budget exhausted (" + std::to_string(expansions) + " > " +
                std::to_string(budget) + " expansions)"),
          expansions(expansions), budget(budget) {}
    unsigned long long expansions, budget;
};

class NotASolutionError : public Error {
public:
    NotASolutionError() : Error("vector does not solve A*v = 0") {}
};

class InconsistentPairError : public Error {
public:
    explicit InconsistentPairError(std::size_t index)
        : Error("basis element " + std::to_string(index) +
                " violates M*m = -d (engine bug)"),
          index(index) {}
    std::size_t index;
};

class MissingRayError : public Error {
public:
    explicit MissingRayError(std::size_t i)
        : Error("g_i*e_i missing from value parts for i = " + std::to_string(i) +
                " (engine bug)"),
          index(i) {}
    std::size_t index;
};

class InvariantViolationError : public Error {
public:
    explicit InvariantViolationError(const std::string& name)
        : Error("report invariant violated: " + name), name(name) {}
    std::string name;
};

// --- CLI-level failures ----------------------------------------------------

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason),
          line(line), reason(reason) {}
    std::size_t line;
    std::string reason;
};

class InvalidParamsError : public Error {
public:
    explicit InvalidParamsError(const std::string& what) : Error(what) {}
};

}  // namespace lipman
