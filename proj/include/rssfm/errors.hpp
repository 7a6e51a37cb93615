#pragma once

#include <stdexcept>
#include <string>

namespace rssfm {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point lies behind (or numerically on) the camera plane.
struct CheiralityViolation : Error {
    using Error::Error;
};

/// The implicit row equation of an RS projection did not converge.
struct NoConvergence : Error {
    using Error::Error;
};

/// The row quadratic of the rotation-only RS model has no real root.
struct NoRealRoot : Error {
    using Error::Error;
};

/// Input point set does not span enough dimensions for the requested fit.
struct DegenerateConfiguration : Error {
    using Error::Error;
};

/// A matrix claimed to be a rotation fails orthonormality or det checks.
struct InvalidRotation : Error {
    using Error::Error;
};

/// DIAC transfer produced a vanishing (3,3) element.
struct SingularTransfer : Error {
    using Error::Error;
};

/// The point handed to the CMS nullity test does not satisfy the
/// self-calibration constraints.
struct NotASolution : Error {
    using Error::Error;
};

/// The normal equations could not be solved even with maximal damping.
struct NumericalFailure : Error {
    using Error::Error;
};

/// A bundle problem violates the minimal-observation invariants.
struct InsufficientObservations : Error {
    using Error::Error;
};

/// A synthesized camera retained fewer observations than required.
struct InsufficientCoverage : Error {
    using Error::Error;
};

/// A scene or report file could not be parsed or failed validation.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace rssfm
