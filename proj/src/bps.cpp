#include "rulings/bps.hpp"

#include <sstream>
#include <stdexcept>

namespace rulings {

BpsSequence::BpsSequence(std::vector<mpz_class> c) : coeffs(std::move(c)) {
  if (coeffs.empty()) throw std::invalid_argument("BpsSequence: empty coefficient list");
}

BpsSequence::BpsSequence(std::initializer_list<long> values) {
  if (values.size() == 0) throw std::invalid_argument("BpsSequence: empty coefficient list");
  coeffs.reserve(values.size());
  for (long v : values) coeffs.emplace_back(v);
}

std::string tuple_str(const BpsSequence& b) {
  std::ostringstream os;
  os << "(";
  for (std::size_t h = 0; h < b.coeffs.size(); ++h) {
    if (h) os << ", ";
    os << b.coeffs[h].get_str();
  }
  os << ")";
  return os.str();
}

std::string zsq_poly_str(const BpsSequence& b) { return to_z_laurent(b).str(); }

std::string csv_str(const BpsSequence& b) {
  std::ostringstream os;
  for (std::size_t h = 0; h < b.coeffs.size(); ++h) {
    if (h) os << ",";
    os << b.coeffs[h].get_str();
  }
  return os.str();
}

ZLaurent to_z_laurent(const BpsSequence& b) {
  ZLaurent z;
  for (std::size_t h = 0; h < b.coeffs.size(); ++h)
    z.add(2 * static_cast<int>(h), b.coeffs[h]);
  return z;
}

std::vector<mpz_class> parse_mpz_csv(const std::string& text) {
  std::vector<mpz_class> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    // trim surrounding spaces
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("empty integer token in '" + text + "'");
    token = token.substr(b, e - b + 1);
    try {
      out.emplace_back(token);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad integer '" + token + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("no integers in '" + text + "'");
  return out;
}

}  // namespace rulings
