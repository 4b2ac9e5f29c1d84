#include "rulings/azpoly.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace rulings {

AZPoly AZPoly::monomial(mpz_class c, int ae, int se) {
  AZPoly r;
  if (c != 0) r.terms_.emplace(key{ae, se}, std::move(c));
  return r;
}

AZPoly AZPoly::from_slice(const HalfLaurent& slice, int ae) {
  AZPoly r;
  for (const auto& [se, c] : slice.terms()) r.terms_.emplace(key{ae, se}, c);
  return r;
}

int AZPoly::lowest_a_degree() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no a-degree");
  return terms_.begin()->first.first;
}

int AZPoly::highest_a_degree() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no a-degree");
  return terms_.rbegin()->first.first;
}

HalfLaurent AZPoly::a_slice(int ae) const {
  HalfLaurent out;
  auto lo = terms_.lower_bound(key{ae, std::numeric_limits<int>::min()});
  auto hi = terms_.upper_bound(key{ae, std::numeric_limits<int>::max()});
  for (auto it = lo; it != hi; ++it) out.add(it->first.second, it->second);
  return out;
}

void AZPoly::add(int ae, int se, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(key{ae, se}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void AZPoly::add_slice(const HalfLaurent& slice, int ae) {
  for (const auto& [se, c] : slice.terms()) add(ae, se, c);
}

void AZPoly::sub_slice(const HalfLaurent& slice, int ae) {
  for (const auto& [se, c] : slice.terms()) add(ae, se, mpz_class(-c));
}

AZPoly& AZPoly::operator+=(const AZPoly& o) {
  if (this == &o) {  // add() would walk the map it is mutating
    for (auto& [k, c] : terms_) c *= 2;
    return *this;
  }
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

AZPoly& AZPoly::operator-=(const AZPoly& o) {
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, mpz_class(-c));
  return *this;
}

AZPoly operator*(const AZPoly& x, const AZPoly& y) {
  AZPoly r;
  for (const auto& [k1, c1] : x.terms_)
    for (const auto& [k2, c2] : y.terms_)
      r.add(k1.first + k2.first, k1.second + k2.second, mpz_class(c1 * c2));
  return r;
}

AZPoly AZPoly::shifted(int da, int ds) const {
  AZPoly r;
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(key{k.first + da, k.second + ds}, c);
  return r;
}

std::string AZPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
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
    bool wrote = false;
    if (a != 1 || (k.first == 0 && k.second == 0)) {
      os << a.get_str();
      wrote = true;
    }
    if (k.first != 0) {
      if (wrote) os << "*";
      os << "a";
      if (k.first != 1) os << "^" << k.first;
      wrote = true;
    }
    if (k.second != 0) {
      if (wrote) os << "*";
      os << "s";
      if (k.second != 1) os << "^" << k.second;
    }
  }
  return os.str();
}

}  // namespace rulings
