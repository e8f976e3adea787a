#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwa {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// Operands belong to different algebras or ground fields.
class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

// Malformed data (wrong lengths, non-injective index map, ...); distinct from
// semantic validation failure.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Homomorphism data that fails validation was used where validity is required.
class InvalidData : public Error {
public:
    using Error::Error;
};

class ConfigMismatch : public Error {
public:
    using Error::Error;
};

// Generator images do not have the classified homomorphism shape.
class NotClassifiedForm : public Error {
public:
    using Error::Error;
};

// Internal invariant violation during parameter extraction.
class ExtractionFailure : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class NotAutomorphism : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class InvariantViolation : public Error {
public:
    using Error::Error;
};

class UnsupportedConfig : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace qwa
