#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satlink {

/// Base of every error raised by the library. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration: bad geometry, inconsistent link parameters, misaligned profiles.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A precondition of a pure function was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of a rate formula (t_rt <= 0, N < 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Memory allocation requested while a leg has no transmission.
class NoVisibilityError : public Error {
public:
    using Error::Error;
};

/// Static split requested for two profiles that are never visible at the same time.
class NoOverlapError : public Error {
public:
    using Error::Error;
};

/// Validation inputs do not share a bin grid.
class AlignmentError : public Error {
public:
    using Error::Error;
};

class ReplayError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. Row is the 1-based data row (0 for header/metadata problems).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t row, std::string column)
        : Error(what), row_(row), column_(std::move(column)) {}

    std::size_t row() const noexcept { return row_; }
    const std::string& column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::string column_;
};

} // namespace satlink
