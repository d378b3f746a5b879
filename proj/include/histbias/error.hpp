#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace histbias {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration: rule tables, period sets, training parameters.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A token, word, or group that a model or table cannot represent.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Input data that cannot support the requested computation
/// (empty corpus, zero variance, too few samples).
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace histbias
