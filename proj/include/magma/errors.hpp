#pragma once

#include <stdexcept>
#include <string>

namespace magma {

// Raised when a counted oracle would exceed its query budget.
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an algorithm's promise (e.g. "e is a two-sided identity") is
// observed to be false. Detection is best-effort.
struct PromiseViolation : std::runtime_error {
    explicit PromiseViolation(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a parameter violates an operation's precondition.
struct ParameterViolation : std::invalid_argument {
    explicit ParameterViolation(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an exhaustive enumeration or state space exceeds its cap.
struct CombinatorialBlowup : std::runtime_error {
    explicit CombinatorialBlowup(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the text parsers; carries a 1-based line and column.
struct ParseError : std::runtime_error {
    ParseError(std::string file, int line, int column, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + what),
          file(std::move(file)),
          line(line),
          column(column) {}

    std::string file;
    int line;
    int column;
};

}  // namespace magma
