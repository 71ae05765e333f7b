#pragma once

#include <stdexcept>
#include <string>

namespace hermite {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpecMismatchError : Error { using Error::Error; };
struct DivisionByZeroError : Error { using Error::Error; };
struct NotPrimeError : Error { using Error::Error; };
struct OutOfRangeError : Error { using Error::Error; };
struct WeightMismatchError : Error { using Error::Error; };
struct BoxViolationError : Error { using Error::Error; };
struct NotRegularError : Error { using Error::Error; };
struct RangeViolationError : Error { using Error::Error; };
struct ShapeMismatchError : Error { using Error::Error; };
struct SingularMatrixError : Error { using Error::Error; };
struct DegreeMismatchError : Error { using Error::Error; };
struct NotHomogeneousError : Error { using Error::Error; };
struct NotInImageError : Error { using Error::Error; };
struct NotInvariantError : Error { using Error::Error; };
struct BudgetExceededError : Error { using Error::Error; };
struct FixtureParseError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace hermite
