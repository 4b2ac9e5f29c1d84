#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rulings/bps.hpp"

namespace rulings {

enum class ViolationKind { LogConcavity, InternalZero, Unimodality };

std::string violation_kind_str(ViolationKind k);

struct ConjectureReport {
  bool log_concave = true;
  bool no_internal_zeros = true;
  bool unimodal = true;
  // Smallest violating index across the three predicates (ties broken in the
  // order log-concavity, internal zero, unimodality).
  std::optional<std::pair<ViolationKind, int>> first_violation;

  bool all_pass() const { return log_concave && no_internal_zeros && unimodal; }
  bool operator==(const ConjectureReport&) const = default;
};

// a_j^2 >= a_{j-1} a_{j+1} at every interior index; length <= 2 passes
// vacuously. Entries must be >= 0 (NegativeEntry).
bool is_log_concave(const std::vector<mpz_class>& a);

// No zero strictly between two nonzero entries (leading/trailing zeros fine).
bool no_internal_zeros(const std::vector<mpz_class>& a);

// Weakly increasing then weakly decreasing.
bool is_unimodal(const std::vector<mpz_class>& a);

/**
 * All three predicates plus the first violation, for scanner output.
 * Checks the implication "log-concave and no internal zeros => unimodal" on
 * every call and throws InvariantViolation if it ever fails.
 */
ConjectureReport conjecture_report(const std::vector<mpz_class>& a);
ConjectureReport conjecture_report(const BpsSequence& b);

// Coefficientwise product: c_k = sum_i a_i b_{k-i}.
std::vector<mpz_class> convolve(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b);
BpsSequence convolve(const BpsSequence& a, const BpsSequence& b);

}  // namespace rulings
