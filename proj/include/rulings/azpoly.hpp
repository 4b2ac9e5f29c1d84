#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "rulings/laurent.hpp"

namespace rulings {

/**
 * Bivariate Laurent polynomial in (a, s) with exact integer coefficients,
 * the carrier for HOMFLY-PT polynomials. Keys are (a-exponent, s-exponent);
 * no stored coefficient is zero.
 */
class AZPoly {
 public:
  using key = std::pair<int, int>;

  AZPoly() = default;

  static AZPoly monomial(mpz_class c, int ae, int se);
  // Embeds an s-Laurent polynomial at a fixed a-power.
  static AZPoly from_slice(const HalfLaurent& slice, int ae);

  bool is_zero() const { return terms_.empty(); }
  const std::map<key, mpz_class>& terms() const { return terms_; }

  int lowest_a_degree() const;   // throws std::logic_error on zero
  int highest_a_degree() const;  // throws std::logic_error on zero

  // The s-Laurent coefficient of a^ae.
  HalfLaurent a_slice(int ae) const;

  void add(int ae, int se, const mpz_class& c);
  void add_slice(const HalfLaurent& slice, int ae);
  void sub_slice(const HalfLaurent& slice, int ae);

  AZPoly& operator+=(const AZPoly& o);
  AZPoly& operator-=(const AZPoly& o);
  friend AZPoly operator+(AZPoly x, const AZPoly& y) { x += y; return x; }
  friend AZPoly operator-(AZPoly x, const AZPoly& y) { x -= y; return x; }
  friend AZPoly operator*(const AZPoly& x, const AZPoly& y);
  AZPoly& operator*=(const AZPoly& o) { *this = *this * o; return *this; }

  // Multiplication by a^da * s^ds.
  AZPoly shifted(int da, int ds) const;

  bool operator==(const AZPoly&) const = default;

  // Debug/diagnostic form, term by term in (a, s).
  std::string str() const;

 private:
  std::map<key, mpz_class> terms_;
};

}  // namespace rulings
