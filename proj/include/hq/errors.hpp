#pragma once

#include <stdexcept>
#include <string>

namespace hq {

/// Base class for all hqsim errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Site dimension < 2, or a dimension product too large to materialize.
struct DimensionError : Error { using Error::Error; };

/// Matrix shapes incompatible with the requested operation.
struct ShapeError : Error { using Error::Error; };

/// Index or exponent outside its declared range.
struct RangeError : Error { using Error::Error; };

/// Invalid site placement (repeated site, index out of range).
struct PlacementError : Error { using Error::Error; };

/// Bipartition that does not split the register into two non-empty groups.
struct PartitionError : Error { using Error::Error; };

/// Input fails a contract check (non-unitary operand, bad state, ...).
struct ValidationError : Error { using Error::Error; };

/// Construction requested outside the supported configuration space.
struct UnsupportedError : Error { using Error::Error; };

/// File or stream failure.
struct IoError : Error { using Error::Error; };

/// Iterative decomposition failed to converge; carries the sweep count.
struct NumericalFailure : Error {
    NumericalFailure(const std::string& what, int iterations_)
        : Error(what), iterations(iterations_) {}
    int iterations = 0;
};

}  // namespace hq
