// errors.hpp — exception hierarchy used across the library
//
// The CLI maps these onto exit codes: ValidationError/ParseError -> 2,
// SolverError -> 3, IoError -> 4.

#pragma once

#include <stdexcept>
#include <string>

namespace ccq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad physical parameters, states, or user input.
struct ValidationError : Error {
    using Error::Error;
};

struct NegativeRate : ValidationError {
    using ValidationError::ValidationError;
};

struct ZeroGamma1 : ValidationError {
    using ValidationError::ValidationError;
};

struct NonSquare : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownPreset : ValidationError {
    using ValidationError::ValidationError;
};

// Numerical failure inside a solver or measure computation.
struct SolverError : Error {
    using Error::Error;
};

struct StepSizeUnderflow : SolverError {
    using SolverError::SolverError;
};

// Two poles of G(s) closer than the partial-fraction conditioning threshold;
// callers fall back to the ODE backend.
struct RepeatedRoots : SolverError {
    using SolverError::SolverError;
};

struct GridTooCoarse : SolverError {
    using SolverError::SolverError;
};

struct HorizonTooShort : SolverError {
    using SolverError::SolverError;
};

struct NegativeEigenvalue : SolverError {
    using SolverError::SolverError;
};

struct NotXState : SolverError {
    using SolverError::SolverError;
};

// Malformed configuration text.
struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace ccq
