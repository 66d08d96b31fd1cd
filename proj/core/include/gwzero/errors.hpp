#pragma once

#include <stdexcept>
#include <string>

namespace gwzero {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vector length does not match the ambient lattice rank.
struct DimensionError : Error {
    using Error::Error;
};

/// Operation requires a nondegenerate form (det != 0).
struct DegenerateFormError : Error {
    using Error::Error;
};

/// Operation is undefined on the zero homology class.
struct ZeroClassError : Error {
    using Error::Error;
};

/// Basis label collision.
struct LabelError : Error {
    using Error::Error;
};

/// Cohomology class used at the wrong degree.
struct DegreeError : Error {
    using Error::Error;
};

/// A stated hypothesis of the operation fails (wrong class kind, base not
/// simply connected, ...).
struct HypothesisError : Error {
    using Error::Error;
};

/// Constructed object violates a structural invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Malformed manifest file or query.
struct ManifestError : Error {
    using Error::Error;
};

}  // namespace gwzero
