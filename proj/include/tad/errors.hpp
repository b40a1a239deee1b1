#pragma once

#include <stdexcept>
#include <string>

namespace tad {

// Base class for all toolkit errors. The CLI maps subclasses onto exit codes:
// input/format problems -> 2, numerical failures -> 3, I/O failures -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- input / format errors (exit code 2) ---
struct ParseError : Error {
    using Error::Error;
};
struct MissingColumnError : Error {
    using Error::Error;
};
struct DuplicateObservationError : Error {
    using Error::Error;
};
struct MissingFeatureError : Error {
    using Error::Error;
};
struct TooShortError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct LengthMismatchError : Error {
    using Error::Error;
};
struct InsufficientNormalsError : Error {
    using Error::Error;
};
struct DisjointnessViolationError : Error {
    using Error::Error;
};
struct EmptyValidationError : Error {
    using Error::Error;
};
struct InvalidSpecError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

// --- numerical errors (exit code 3) ---
struct NumericalFailureError : Error {
    using Error::Error;
};
struct SingularCovarianceError : NumericalFailureError {
    using NumericalFailureError::NumericalFailureError;
};

// --- I/O errors (exit code 4) ---
struct IoError : Error {
    using Error::Error;
};

}  // namespace tad
