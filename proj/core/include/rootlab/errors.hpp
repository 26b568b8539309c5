#pragma once

#include <stdexcept>
#include <string>

namespace rootlab {

// Base class for every numeric failure a scheme step can raise. Callers that
// drive iterations (run, classify_orbit) catch NumericError and convert it
// into a failed-run / NONE-pixel outcome; anything else is a programming bug.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division with an exactly-zero denominator.
struct DivideByZero : NumericError {
    DivideByZero() : NumericError("division by exact zero") {}
    explicit DivideByZero(const std::string& what) : NumericError(what) {}
};

// A target function was evaluated outside its mathematical domain
// (log of a nonpositive value, sqrt of a negative value, ...).
struct DomainError : NumericError {
    using NumericError::NumericError;
};

// f'(x) vanished where a step needs to divide by it.
struct ZeroDerivative : NumericError {
    ZeroDerivative() : NumericError("derivative is zero at the iterate") {}
};

// A divided-difference or interpolation denominator vanished (coincident
// function values / nodes), so the step's geometry is degenerate.
struct DegenerateGeometry : NumericError {
    using NumericError::NumericError;
};

// An intermediate value overflowed to infinity or became NaN.
struct NonFiniteValue : NumericError {
    NonFiniteValue() : NumericError("non-finite intermediate value") {}
    explicit NonFiniteValue(const std::string& what) : NumericError(what) {}
};

}  // namespace rootlab
