#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropical {

/// Operands with incompatible shapes.
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A stated precondition of the called operation does not hold.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact arithmetic left the representable range.
class arithmetic_overflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Atom-file text rejected by the parser. Carries 1-based line/column.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + what),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

/// An enumeration exceeded its configured budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal invariant violation; indicates a library bug, not bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tropical
