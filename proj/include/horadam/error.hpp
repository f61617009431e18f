#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace horadam {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Malformed scalar or config text. `position` is the 0-based offset of the
/// first offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class IndexGuardExceeded : public Error {
public:
    IndexGuardExceeded(long long index, long long guard)
        : Error("index " + std::to_string(index) + " exceeds guard " + std::to_string(guard)) {}
};

class UnknownPreset : public Error {
public:
    explicit UnknownPreset(const std::string& name) : Error("unknown preset '" + name + "'") {}
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// A hypothesis of an identity fails at a concrete instance. `tag` is a short
/// machine-stable label such as "w_{r-1}!=0" or "r!=-1".
class PreconditionUnmet : public Error {
public:
    explicit PreconditionUnmet(std::string tag)
        : Error("precondition " + tag), tag_(std::move(tag)) {}

    const std::string& tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace horadam
