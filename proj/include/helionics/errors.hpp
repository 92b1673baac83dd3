#pragma once

#include <stdexcept>
#include <string>

namespace helionics {

// Base for all library failures so callers can catch the family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Panel doubling hit max_panels with the error estimate above tolerance.
struct NonConvergenceError : Error {
    using Error::Error;
};

// Bisection bracket endpoints do not straddle a sign change.
struct NoSignChangeError : Error {
    using Error::Error;
};

struct NonPositiveExponentError : Error {
    using Error::Error;
};

// Triplet constructed with equal exponents (rejected by contract).
struct DegenerateTripletError : Error {
    using Error::Error;
};

// Variational optimum lies at or above the one-electron ion threshold.
struct NoBoundStateError : Error {
    using Error::Error;
};

struct NotUnityNormalizedError : Error {
    using Error::Error;
};

// One-density passed to a mutual-information routine is not the marginal
// of the pair density.
struct MarginalMismatchError : Error {
    using Error::Error;
};

// to_unity applied to an already unity-normalized density.
struct NoOpError : Error {
    using Error::Error;
};

// Plot spec references a column absent from the table (or no series at all).
struct MissingColumnError : Error {
    using Error::Error;
};

} // namespace helionics
