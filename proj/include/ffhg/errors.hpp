#pragma once

#include <stdexcept>
#include <string>

namespace ffhg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field_core
struct NotPrime : Error { using Error::Error; };
struct OrderNotDividing : Error { using Error::Error; };
struct ZeroArgument : Error { using Error::Error; };
struct MissingRoot : Error { using Error::Error; };

// cyclotomic
struct ConductorMismatch : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct NotRational : Error { using Error::Error; };

// characters / hypergeometric
struct ConductorTooLarge : Error { using Error::Error; };
struct OddOrder : Error { using Error::Error; };

// curves
struct SingularCurve : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct NoSquareRoot : Error { using Error::Error; };

// hecke
struct NotRepresentable : Error { using Error::Error; };
struct NormalizationMismatch : Error { using Error::Error; };

// verifier / CLI
struct CongruenceViolation : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

} // namespace ffhg
