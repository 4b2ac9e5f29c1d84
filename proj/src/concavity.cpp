#include "rulings/concavity.hpp"

#include "rulings/errors.hpp"

namespace rulings {

namespace {

void require_nonnegative(const std::vector<mpz_class>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0)
      throw NegativeEntry("negative entry " + a[i].get_str() + " at index " + std::to_string(i));
}

std::optional<int> log_concavity_violation(const std::vector<mpz_class>& a) {
  for (std::size_t j = 1; j + 1 < a.size(); ++j)
    if (a[j] * a[j] < a[j - 1] * a[j + 1]) return static_cast<int>(j);
  return std::nullopt;
}

std::optional<int> internal_zero(const std::vector<mpz_class>& a) {
  std::size_t lo = 0, hi = a.size();
  while (lo < a.size() && a[lo] == 0) ++lo;
  while (hi > lo && a[hi - 1] == 0) --hi;
  for (std::size_t j = lo; j < hi; ++j)
    if (a[j] == 0) return static_cast<int>(j);
  return std::nullopt;
}

std::optional<int> unimodality_violation(const std::vector<mpz_class>& a) {
  bool descending = false;
  for (std::size_t j = 1; j < a.size(); ++j) {
    if (a[j] < a[j - 1])
      descending = true;
    else if (a[j] > a[j - 1] && descending)
      return static_cast<int>(j);
  }
  return std::nullopt;
}

}  // namespace

std::string violation_kind_str(ViolationKind k) {
  switch (k) {
    case ViolationKind::LogConcavity: return "log-concavity";
    case ViolationKind::InternalZero: return "internal-zero";
    case ViolationKind::Unimodality: return "unimodality";
  }
  return "?";
}

bool is_log_concave(const std::vector<mpz_class>& a) {
  require_nonnegative(a);
  return !log_concavity_violation(a).has_value();
}

bool no_internal_zeros(const std::vector<mpz_class>& a) {
  require_nonnegative(a);
  return !internal_zero(a).has_value();
}

bool is_unimodal(const std::vector<mpz_class>& a) {
  require_nonnegative(a);
  return !unimodality_violation(a).has_value();
}

ConjectureReport conjecture_report(const std::vector<mpz_class>& a) {
  require_nonnegative(a);
  const auto lc = log_concavity_violation(a);
  const auto iz = internal_zero(a);
  const auto um = unimodality_violation(a);

  ConjectureReport r;
  r.log_concave = !lc.has_value();
  r.no_internal_zeros = !iz.has_value();
  r.unimodal = !um.has_value();
  if (r.log_concave && r.no_internal_zeros && !r.unimodal)
    throw InvariantViolation(
        "log-concave sequence without internal zeros failed unimodality");

  const std::pair<std::optional<int>, ViolationKind> cand[] = {
      {lc, ViolationKind::LogConcavity},
      {iz, ViolationKind::InternalZero},
      {um, ViolationKind::Unimodality},
  };
  for (const auto& [idx, kind] : cand) {
    if (!idx) continue;
    if (!r.first_violation || *idx < r.first_violation->second)
      r.first_violation = {kind, *idx};
  }
  return r;
}

ConjectureReport conjecture_report(const BpsSequence& b) { return conjecture_report(b.coeffs); }

std::vector<mpz_class> convolve(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

BpsSequence convolve(const BpsSequence& a, const BpsSequence& b) {
  return BpsSequence(convolve(a.coeffs, b.coeffs));
}

}  // namespace rulings
