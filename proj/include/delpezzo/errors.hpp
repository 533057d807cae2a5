#pragma once

#include <stdexcept>
#include <string>

namespace delpezzo {

/// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two divisor classes live on lattices of different rank.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// An operation was asked for a surface outside its supported range
/// (e.g. exceptional-class enumeration for r > 8).
struct UnsupportedSurfaceError : Error {
    using Error::Error;
};

/// A PointSpec is inconsistent with the surface it is used on.
struct InvalidPointSpecError : Error {
    using Error::Error;
};

/// A point configuration fails its general-position precondition
/// (rank-deficient evaluation matrix, no usable interpolation nodes).
struct DegenerateConfigurationError : Error {
    using Error::Error;
};

/// Every member of the sampled cubic pencil is singular; the
/// discriminant vanishes identically and the sample must be rejected.
struct NonReducedPencilError : Error {
    using Error::Error;
};

/// The requested minimum is an infimum only; no witness curve exists.
struct NotAttainedError : Error {
    using Error::Error;
};

} // namespace delpezzo
