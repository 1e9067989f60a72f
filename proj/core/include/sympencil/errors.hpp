#pragma once

#include <stdexcept>
#include <string>

namespace sympencil {

/// Base class for every error raised by the library.
class PencilError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands whose shapes do not fit together.
class DimensionError : public PencilError {
public:
    using PencilError::PencilError;
};

/// A transformation matrix that must be invertible is not (numerically).
class SingularMatrixError : public PencilError {
public:
    using PencilError::PencilError;
};

/// Arguments outside an operation's documented domain.
class PreconditionError : public PencilError {
public:
    using PencilError::PencilError;
};

/// Malformed JSON input for pencils or descriptors.
class FormatError : public PencilError {
public:
    using PencilError::PencilError;
};

/// A structural inconsistency that is not a rank-decision problem, e.g. a
/// symmetric pencil whose left and right minimal indices disagree.
class StructureError : public PencilError {
public:
    using PencilError::PencilError;
};

/// Congruence witness that does not reproduce the pencil it claims to.
class InvalidWitness : public PencilError {
public:
    InvalidWitness(const std::string& what, double residual)
        : PencilError(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// A numerical rank decision without a clear singular-value gap.
///
/// Carries the two singular values straddling the decision point, so a
/// caller can report how far the data was from a clean decision.
class IndeterminateStructure : public PencilError {
public:
    IndeterminateStructure(const std::string& what, double retained, double discarded)
        : PencilError(what), retained_(retained), discarded_(discarded) {}

    /// Smallest singular value counted towards the rank.
    double retained() const noexcept { return retained_; }
    /// Largest singular value treated as zero.
    double discarded() const noexcept { return discarded_; }

private:
    double retained_;
    double discarded_;
};

}  // namespace sympencil
