#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mall {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is 1-based; a value of `size + 1`
/// means the input ended too early.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string &what)
        : Error("syntax error at offset " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An operation was called on an input outside its contract (invalid proof,
/// mismatched conclusions, unbound variable, not an oBDD, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A brute-force path refused an input above its configured size cap.
class CapExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

} // namespace mall
