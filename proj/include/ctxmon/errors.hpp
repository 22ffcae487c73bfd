#pragma once

#include <stdexcept>
#include <string>

namespace ctxmon {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed file content (carries line/field context in the message).
class ParseError : public Error {
public:
    using Error::Error;
};

// Schema, invariant, or configuration violations. Maps to CLI exit status 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Bad arguments to an operation (length mismatch, out-of-range window, ...).
class InputError : public Error {
public:
    using Error::Error;
};

// Filesystem trouble. Maps to CLI exit status 1.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace ctxmon
