#pragma once

#include <stdexcept>
#include <string>

namespace trirec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is degenerate for the requested operation (zero where a nonzero
/// value is required, vanishing discriminant where a division by p^2 - 4q
/// or by sigma - tau occurs).
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Trial division could not certify the squarefree part within its bound.
class FactorizationIncomplete : public Error {
public:
    using Error::Error;
};

/// Two quadratic-field elements with different radicands were combined.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

/// An index or parameter lies outside the operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Polynomial division left a nonzero remainder.
class InexactDivision : public Error {
public:
    using Error::Error;
};

/// A value expected to be Galois-fixed came out irrational.
class IrrationalValue : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace trirec
