#pragma once

#include <stdexcept>
#include <string>

namespace hypermix {

// Base for every error thrown by the library. The CLI maps subtypes to
// exit codes; library callers can catch the specific type they care about.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// moebius_schottky
struct ParabolicOrElliptic : Error { using Error::Error; };
struct DegenerateC : Error { using Error::Error; };

// orbit_census
struct NonPrimitive : Error { using Error::Error; };
struct Inadmissible : Error { using Error::Error; };
struct NotLoxodromic : Error { using Error::Error; };
struct ExpansionBoundUnavailable : Error { using Error::Error; };
struct EmptyCensus : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };

// diophantine
struct ZeroIndex : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };

// sft_core
struct NotAperiodic : Error { using Error::Error; };
struct BadLambda : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct DepthMismatch : Error { using Error::Error; };

// transfer_ops
struct NonPositiveRoof : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct ZeroFrequency : Error { using Error::Error; };

// suspension_corr
struct NonConvergent : Error { using Error::Error; };
struct TailBoundTooLarge : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };
struct GridTooShort : Error { using Error::Error; };

// cli_harness
struct ConfigInvalid : Error { using Error::Error; };
struct FixtureError : Error { using Error::Error; };

}  // namespace hypermix
