#pragma once

#include <stdexcept>
#include <string>

namespace oddsl2 {

// Exact division failed; this always signals an implementation bug,
// never bad user input.
struct NonExactDivision : std::logic_error {
    explicit NonExactDivision(const std::string& what) : std::logic_error(what) {}
};

struct MismatchedVariableCount : std::invalid_argument {
    explicit MismatchedVariableCount(const std::string& what) : std::invalid_argument(what) {}
};

struct DegreeBudgetExceeded : std::logic_error {
    explicit DegreeBudgetExceeded(const std::string& what) : std::logic_error(what) {}
};

struct NonTerminatingReduction : std::logic_error {
    explicit NonTerminatingReduction(const std::string& what) : std::logic_error(what) {}
};

struct OracleMismatch : std::logic_error {
    explicit OracleMismatch(const std::string& what) : std::logic_error(what) {}
};

// Parse failure with the offset of the offending character.
struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(std::size_t pos_, const std::string& what) : std::runtime_error(what), pos(pos_) {}
};

} // namespace oddsl2
