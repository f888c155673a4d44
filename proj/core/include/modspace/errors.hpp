#pragma once

#include <stdexcept>

namespace modspace {

/// Exponent or weight outside the range a characterization theorem covers.
struct OutOfRangeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroDenominatorError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Witness family requested outside its validity branch (e.g. 1/r <= 0).
struct InvalidBranchError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PeriodOverflowError : std::domain_error {
    using std::domain_error::domain_error;
};

struct GridMisalignedError : std::domain_error {
    using std::domain_error::domain_error;
};

struct BandExceededError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace modspace
