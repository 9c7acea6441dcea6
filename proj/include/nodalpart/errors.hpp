#pragma once

#include <stdexcept>
#include <string>

namespace nodalpart {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad dimensions, unknown names, missing labels, bad JSON.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A path handed to `cut` violates its preconditions (dangling end,
// singular vertex, runs along the boundary set, not simple).
class PathError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// A combinatorial identity that must hold did not. Always a bug or a
// counterexample, never bad luck.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// A face-center sample fell within the zero tolerance.
class ResolutionError : public Error {
public:
    using Error::Error;
};

// Refinement levels never agreed on the invariants.
class InstabilityError : public Error {
public:
    using Error::Error;
};

}  // namespace nodalpart
