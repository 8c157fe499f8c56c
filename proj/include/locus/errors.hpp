#pragma once

#include <stdexcept>
#include <string>

namespace locus {

/// Root of the library's error hierarchy.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad text, bad JSON, mismatched fields or dimensions.
/// The CLI maps this family to exit code 2.
struct InputError : Error {
    using Error::Error;
};

/// A stated operation precondition does not hold for the given arguments.
/// The CLI maps this family to exit code 3.
struct PreconditionError : Error {
    using Error::Error;
};

struct CompositeModulusError : InputError {
    using InputError::InputError;
};

struct FieldMismatchError : InputError {
    using InputError::InputError;
};

struct DivisionByZeroError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct ParseError : InputError {
    using InputError::InputError;
};

struct EmptyPartitionError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct DimensionMismatchError : InputError {
    using InputError::InputError;
};

struct KindMismatchError : InputError {
    using InputError::InputError;
};

struct WeightMismatchError : InputError {
    using InputError::InputError;
};

struct ZeroRotationNumberError : InputError {
    using InputError::InputError;
};

struct ZeroWeightError : InputError {
    using InputError::InputError;
};

struct RepeatedWeightError : InputError {
    using InputError::InputError;
};

struct RepeatedWeightModPError : InputError {
    using InputError::InputError;
};

struct DimensionNotMultipleOfFourError : InputError {
    using InputError::InputError;
};

/// Which precondition of vanishing_check / elimination_oracle failed.
enum class Precondition { Stability, Weight, Multiplicity };

struct PreconditionViolation : PreconditionError {
    PreconditionViolation(Precondition which, const std::string& msg)
        : PreconditionError(msg), which(which) {}
    Precondition which;
};

/// Input fixed-point data whose below-top-weight sums do not vanish.
struct StabilityViolation : PreconditionError {
    StabilityViolation(std::string witness, const std::string& msg)
        : PreconditionError(msg), witness(std::move(witness)) {}
    std::string witness;  // canonical text of the violating partition
};

/// Two routes that must agree disagreed.  Reaching this is a bug.
struct InternalInconsistencyError : Error {
    using Error::Error;
};

}  // namespace locus
