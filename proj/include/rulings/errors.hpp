#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rulings {

// Root of the library's error hierarchy. Everything thrown on a domain-level
// failure derives from this; plain std::invalid_argument is reserved for
// violated call preconditions (bad indices, malformed input text, ...).
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define RULINGS_ERROR(NAME)                                          \
  struct NAME : Error {                                              \
    explicit NAME(const std::string& what) : Error(what) {}          \
  }

// exact algebra
RULINGS_ERROR(NotPalindromic);
RULINGS_ERROR(FractionalPower);
RULINGS_ERROR(NotZExpressible);

// closed forms
RULINGS_ERROR(NotCoprime);
RULINGS_ERROR(NotAForest);

// ruling DP
RULINGS_ERROR(NotEvenPolynomial);
RULINGS_ERROR(ResourceExceeded);

// sequence predicates
RULINGS_ERROR(NegativeEntry);

// scanner
RULINGS_ERROR(NotSinglePeak);
RULINGS_ERROR(StrandMismatch);
RULINGS_ERROR(CacheCorrupt);

// "cannot happen" conditions; reaching one means a bug, not bad input
RULINGS_ERROR(InvariantViolation);

#undef RULINGS_ERROR

// Division that was required to be exact over the integers but is not.
// Carries the offending remainder for diagnostics.
struct DivisionInexact : Error {
  std::string remainder;
  DivisionInexact(const std::string& what, std::string rem)
      : Error(what + " [remainder: " + rem + "]"), remainder(std::move(rem)) {}
};

}  // namespace rulings
