#pragma once

#include <stdexcept>
#include <string>

namespace boxcalc {

struct BoxcalcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

/// Configuration does not span the ambient space ("W(X) is not locally L^1"
/// territory) — rejected everywhere, never given a value convention.
struct NonSpanningList : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

/// Desk-scale envelope n <= 3, N <= 8 exceeded.
struct UnsupportedSize : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

/// Evaluation requested at a point on the affine arrangement.
struct NonRegularPoint : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

/// A whole segment lies inside an affine hyperplane of the arrangement.
struct SegmentInsideArrangement : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

/// A Bernoulli factor's argument hit an integer (branch point).
struct FormHitsInteger : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

struct NonAdmissibleSubspace : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

struct IntegerTwist : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

struct NotAToricVertex : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

struct NotInDMSpace : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

struct UnsupportedDimension : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

struct ParseError : BoxcalcError {
    using BoxcalcError::BoxcalcError;
};

}  // namespace boxcalc
