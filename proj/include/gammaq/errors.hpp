#pragma once

#include <stdexcept>

namespace gammaq {

/// Gamma and polygamma have poles exactly at the non-positive integers.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Binary series operations require equal truncation orders.
struct OrderMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

/// Guard-precision disagreement: the caller must retry at higher precision.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gammaq
