#pragma once

#include <stdexcept>
#include <string>

namespace tetrasym {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// numeric_core
struct EmptyInput : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };

// category_backend
struct ParseError : Error { using Error::Error; };
struct InvalidIrrep : Error { using Error::Error; };
struct InvalidCocycle : Error { using Error::Error; };
struct CoherenceViolation : Error { using Error::Error; };

// rigidity_standard
struct NoInvariantVector : Error { using Error::Error; };
struct GaugeInconsistency : Error { using Error::Error; };
struct NotRelated : Error { using Error::Error; };

// fs_indicators
struct WrongBackend : Error { using Error::Error; };
struct NotIndicatorValued : Error { using Error::Error; };
struct NotSelfConjugate : Error { using Error::Error; };

// frobenius_s4
struct SelectionViolation : Error { using Error::Error; };
struct NotCase2 : Error { using Error::Error; };
struct OmegaTrivial : Error { using Error::Error; };

}  // namespace tetrasym
