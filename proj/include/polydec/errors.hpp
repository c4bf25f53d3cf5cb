#ifndef POLYDEC_ERRORS_HPP
#define POLYDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polydec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error { using Error::Error; };
struct NotIrreducibleError : Error { using Error::Error; };
struct DegreeMismatchError : Error { using Error::Error; };
struct DivisionByZeroError : Error { using Error::Error; };
struct FieldMismatchError : Error { using Error::Error; };
struct DuplicatePointError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct ZeroPolynomialError : Error { using Error::Error; };
struct DegreeTooLargeError : Error { using Error::Error; };
struct InterpolationFailedError : Error { using Error::Error; };
struct ParameterViolationError : Error { using Error::Error; };
struct DesignMismatchError : Error { using Error::Error; };
struct SingularBasisError : Error { using Error::Error; };
struct ZeroDirectionError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };
struct TooManySetsError : Error { using Error::Error; };
struct NotF2BasisError : Error { using Error::Error; };
struct DimensionOutOfRangeError : Error { using Error::Error; };
struct LinearlyDependentError : Error { using Error::Error; };
struct RadiusOutOfRangeError : Error { using Error::Error; };
struct AdviceSpaceTooLargeError : TooLargeError { using TooLargeError::TooLargeError; };
struct BadPositionsError : Error { using Error::Error; };

}  // namespace polydec

#endif
