#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input. CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class ArityError : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
    explicit ParseError(const std::string& what) : InputError(what) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

// Size guard tripped; raise the limit explicitly to proceed.
class ResourceError : public InputError {
public:
    using InputError::InputError;
};

// Operation called on a structure that does not meet its hypotheses.
class PreconditionError : public InputError {
public:
    using InputError::InputError;
};

class UnsupportedRingError : public Error {
public:
    using Error::Error;
};

// A structure failed an axiom. Carries the axiom name and the first witness.
class ValidationError : public Error {
public:
    ValidationError(std::string axiom, std::vector<std::size_t> witness, const std::string& what)
        : Error(what), axiom_(std::move(axiom)), witness_(std::move(witness)) {}
    const std::string& axiom() const { return axiom_; }
    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::vector<std::size_t> witness_;
};

class NoIntegralError : public Error {
public:
    using Error::Error;
};

// A result the library produced failed its own re-verification.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace ybh
