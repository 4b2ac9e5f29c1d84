#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "rulings/laurent.hpp"

namespace rulings {

/**
 * Coefficient list (a_0, ..., a_delta) of a polynomial in z^2: index h holds
 * the coefficient of z^{2h}. Always nonempty; the zero polynomial is (0).
 * Sequences coming from rainbow closures have all entries >= 0.
 */
struct BpsSequence {
  std::vector<mpz_class> coeffs;

  BpsSequence() : coeffs{mpz_class(0)} {}
  explicit BpsSequence(std::vector<mpz_class> c);
  BpsSequence(std::initializer_list<long> values);

  int delta() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const BpsSequence&) const = default;
};

// "(4, 20, 33, 24, 8, 1)"
std::string tuple_str(const BpsSequence& b);
// "4 + 20*z^2 + 33*z^4 + ..."
std::string zsq_poly_str(const BpsSequence& b);
// "4,20,33,24,8,1"
std::string csv_str(const BpsSequence& b);

// The polynomial itself: sum of coeffs[h] * z^{2h}.
ZLaurent to_z_laurent(const BpsSequence& b);

// Parses comma-separated decimal integers ("1,0,12"); throws
// std::invalid_argument on malformed input. Used by the cache loader and the
// `check` subcommand.
std::vector<mpz_class> parse_mpz_csv(const std::string& text);

}  // namespace rulings
