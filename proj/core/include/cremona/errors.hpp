#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

/// Malformed textual input (type literals, map literals, JSON).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The operation requires a proper homaloidal type.
class ImproperTypeError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Parameter outside the range where a named family is defined.
class DomainError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The request needs enumeration beyond the supported degree horizon.
class HorizonError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Fixed-width integer arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace cremona
