#pragma once

#include <stdexcept>
#include <string>

namespace dqt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (malformed area word, bad labels, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation was applied outside its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A pair of lattice paths does not describe a reduced polyomino.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// A size cap (member count, degree cap) would be exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A family request is inconsistent or infinite.
class SpecError : public Error {
public:
    using Error::Error;
};

/// A rational evaluation hit a vanishing denominator.
class PoleError : public Error {
public:
    using Error::Error;
};

/// No pole-free evaluation point could be found for a grid cell.
class InfeasibleGridError : public Error {
public:
    using Error::Error;
};

/// An internal assertion of an algorithm failed (e.g. Phi found no [1,0]).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace dqt
