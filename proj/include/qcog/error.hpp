#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcog {

/// Root of every error thrown by the library. The CLI maps IoError to exit
/// code 1 and everything else to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. `line` is 1-based; 0 when not line-oriented.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class ConsistencyError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// An experiment in which no cell was ever observed.
class DegenerateError : public Error {
public:
    using Error::Error;
};

}  // namespace qcog
