#pragma once

#include <stdexcept>
#include <string>

namespace ducci {

// Exponent arithmetic left the signed 64-bit range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// A computation would exceed a configured size limit (materialization, census cap, step budget).
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by element_value when an exponent is too large to materialize.
class ResourceError : public BudgetError {
public:
    using BudgetError::BudgetError;
};

} // namespace ducci
