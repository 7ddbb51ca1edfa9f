#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prox {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed index file. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EmptyIndexError : public Error {
public:
    EmptyIndexError() : Error("empty index") {}
};

class KeywordNotFoundError : public Error {
public:
    explicit KeywordNotFoundError(const std::string& keyword)
        : Error("keyword not in document: " + keyword), keyword_(keyword) {}
    const std::string& keyword() const noexcept { return keyword_; }

private:
    std::string keyword_;
};

/// Raised by the run-aware searches for queries with a frequency above one.
class UnsupportedFrequencyError : public Error {
public:
    UnsupportedFrequencyError()
        : Error("unsupported frequency: run-aware search requires f = 1 for every keyword") {}
};

class InvalidQueryError : public Error {
public:
    using Error::Error;
};

/// Bad benchmark or generator configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace prox
