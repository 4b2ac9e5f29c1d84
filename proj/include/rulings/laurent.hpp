#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "rulings/errors.hpp"

namespace rulings {

/**
 * Sparse Laurent polynomial in one formal variable with exact integer
 * coefficients. The Tag parameter exists purely to keep polynomials in
 * different variables apart at compile time: HalfLaurent lives in s with
 * s^2 = q (so integer q-powers are even s-exponents), ZLaurent lives in
 * z = s - s^{-1}.
 *
 * Representation invariant: no stored coefficient is zero.
 */
template <typename Tag>
class SparseLaurent {
 public:
  SparseLaurent() = default;
  explicit SparseLaurent(mpz_class c) {
    if (c != 0) terms_.emplace(0, std::move(c));
  }

  static SparseLaurent monomial(mpz_class c, int e) {
    SparseLaurent r;
    if (c != 0) r.terms_.emplace(e, std::move(c));
    return r;
  }
  static SparseLaurent one() { return SparseLaurent(mpz_class(1)); }

  bool is_zero() const { return terms_.empty(); }
  int degree() const { require_nonzero(); return terms_.rbegin()->first; }
  int low_degree() const { require_nonzero(); return terms_.begin()->first; }

  mpz_class coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }
  const std::map<int, mpz_class>& terms() const { return terms_; }

  void add(int e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void sub(int e, const mpz_class& c) { add(e, mpz_class(-c)); }

  SparseLaurent& operator+=(const SparseLaurent& o) {
    if (this == &o) {  // add() would walk the map it is mutating
      for (auto& [e, c] : terms_) c *= 2;
      return *this;
    }
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  SparseLaurent& operator-=(const SparseLaurent& o) {
    if (this == &o) {
      terms_.clear();
      return *this;
    }
    for (const auto& [e, c] : o.terms_) sub(e, c);
    return *this;
  }
  SparseLaurent operator-() const {
    SparseLaurent r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend SparseLaurent operator+(SparseLaurent a, const SparseLaurent& b) {
    a += b;
    return a;
  }
  friend SparseLaurent operator-(SparseLaurent a, const SparseLaurent& b) {
    a -= b;
    return a;
  }
  friend SparseLaurent operator*(const SparseLaurent& a, const SparseLaurent& b) {
    SparseLaurent r;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) r.add(e1 + e2, mpz_class(c1 * c2));
    return r;
  }
  SparseLaurent& operator*=(const SparseLaurent& o) {
    *this = *this * o;
    return *this;
  }
  friend SparseLaurent operator*(SparseLaurent a, const mpz_class& k) {
    if (k == 0) return SparseLaurent();
    for (auto& [e, c] : a.terms_) c *= k;
    return a;
  }
  friend SparseLaurent operator*(const mpz_class& k, SparseLaurent a) {
    return std::move(a) * k;
  }

  // Multiplication by variable^k.
  SparseLaurent shifted(int k) const {
    SparseLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  bool operator==(const SparseLaurent&) const = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      mpz_class a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
        first = false;
      } else {
        os << (a < 0 ? " - " : " + ");
        a = abs(a);
      }
      if (e == 0) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << "*";
        os << Tag::name;
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void require_nonzero() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no degree");
  }
  std::map<int, mpz_class> terms_;
};

struct SVarTag {
  static constexpr const char* name = "s";
};
struct ZVarTag {
  static constexpr const char* name = "z";
};

// Laurent polynomial in s where s^2 = q; hosts all q^{1/2}-power arithmetic.
using HalfLaurent = SparseLaurent<SVarTag>;
// Laurent polynomial in z = s - s^{-1}.
using ZLaurent = SparseLaurent<ZVarTag>;

// q^k as an element of the s-ring (s-exponent 2k).
inline HalfLaurent q_pow(int k) { return HalfLaurent::monomial(1, 2 * k); }

}  // namespace rulings
