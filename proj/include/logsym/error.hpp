#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace logsym {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (unknown ids, parity violations, bad files).
class InputError : public Error {
public:
    using Error::Error;
};

/// Syntax error in a model file or form expression, with a 1-based location.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column, std::string token)
        : InputError(format(what, line, column, token)), line_(line), column_(column),
          token_(std::move(token)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& token() const noexcept { return token_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column,
                              const std::string& token) {
        std::string s = "line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + what;
        if (!token.empty()) s += " (at '" + token + "')";
        return s;
    }

    std::size_t line_;
    std::size_t column_;
    std::string token_;
};

/// An explicit resource cap (matrix size, divisor size) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace logsym
