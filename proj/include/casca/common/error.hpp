#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace casca {

/// Base class of every error raised by the platform.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input failed a documented invariant (maps to HTTP 400).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A named entity does not exist (maps to HTTP 404).
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// A timestamp or index lies outside the data available (maps to HTTP 416).
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// A remote endpoint could not be reached or dropped the connection.
class ConnectionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace casca
