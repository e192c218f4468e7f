#pragma once

#include <stdexcept>
#include <string>

namespace padyn {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- arithmetic ---
struct NegativeValuation : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };

// --- geometry / morphisms ---
struct BaseLocusHit : Error { using Error::Error; };
struct NonUnitDenominator : Error { using Error::Error; };
struct NotPeriodic : Error { using Error::Error; };
struct InconsistentReductions : Error { using Error::Error; };
struct DegreeCapExceeded : Error { using Error::Error; };
struct NotAMorphism : Error { using Error::Error; };

// --- reduction / orbits ---
struct SearchBudgetExceeded : Error { using Error::Error; };
struct BadReductionPrime : Error { using Error::Error; };
struct NotPeriodicModP : Error { using Error::Error; };

// --- theorems ---
struct DivisibilityViolation : Error { using Error::Error; };
// A TheoremViolation on a verified good-reduction input falsifies the period
// decomposition theorem; tests treat it as the highest-severity failure.
struct TheoremViolation : Error { using Error::Error; };

// --- lifting ---
struct PreconditionFailed : Error { using Error::Error; };
struct SingularJacobian : Error { using Error::Error; };
struct DegenerateMultiplier : Error { using Error::Error; };

// --- parsing / CLI ---
struct ParseError : Error {
    int line = 0, column = 0;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : Error(msg), line(line_), column(column_) {}
};
struct NotHomogeneous : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };

}  // namespace padyn
