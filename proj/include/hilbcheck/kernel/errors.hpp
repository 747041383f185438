#pragma once

#include <stdexcept>
#include <string>

namespace hilbcheck {

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Scalars from two different coefficient domains met in one operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        if (line <= 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    int line_;
    int column_;
};

}  // namespace hilbcheck
