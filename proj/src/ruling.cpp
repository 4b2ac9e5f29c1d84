#include "rulings/ruling.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "rulings/errors.hpp"

namespace rulings {

RulingState::RulingState(std::vector<uint8_t> partner) : partner_(std::move(partner)) {
  const std::size_t m = partner_.size();
  if (m == 0 || m % 2 != 0)
    throw std::invalid_argument("RulingState: needs an even, positive number of positions");
  for (std::size_t i = 0; i < m; ++i) {
    const uint8_t p = partner_[i];
    if (p >= m || p == i || partner_[p] != i)
      throw std::invalid_argument("RulingState: not a fixed-point-free involution");
  }
}

RulingState RulingState::nested(int n) {
  if (n < 1) throw std::invalid_argument("RulingState::nested: n must be >= 1");
  std::vector<uint8_t> p(2 * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = static_cast<uint8_t>(p.size() - 1 - i);
  return RulingState(std::move(p));
}

uint64_t RulingState::pack() const {
  if (partner_.size() > 16) throw std::logic_error("RulingState::pack: more than 16 positions");
  uint64_t key = 0;
  for (std::size_t i = 0; i < partner_.size(); ++i)
    key |= static_cast<uint64_t>(partner_[i]) << (4 * i);
  return key;
}

RulingState RulingState::unpack(uint64_t key, int size) {
  if (size < 2 || size > 16) throw std::logic_error("RulingState::unpack: bad size");
  std::vector<uint8_t> p(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) p[i] = static_cast<uint8_t>((key >> (4 * i)) & 0xF);
  return RulingState(std::move(p));
}

bool switch_allowed(const RulingState& st, int k) {
  const int a = k - 1, b = k;
  if (k < 1 || b >= st.size()) throw std::invalid_argument("switch_allowed: crossing out of range");
  const int pa = st.partner(a), pb = st.partner(b);
  if (pa == b) return false;  // one eye through both positions
  const int a1 = std::min(a, pa), a2 = std::max(a, pa);
  const int b1 = std::min(b, pb), b2 = std::max(b, pb);
  const bool disjoint = a2 < b1 || b2 < a1;
  const bool nested = (a1 < b1 && b2 < a2) || (b1 < a1 && a2 < b2);
  return disjoint || nested;
}

std::optional<RulingState> step(const RulingState& st, int k, bool do_switch) {
  const int a = k - 1, b = k;
  if (k < 1 || b >= st.size()) throw std::invalid_argument("step: crossing out of range");
  if (st.partner(a) == b) return std::nullopt;
  if (do_switch) {
    if (!switch_allowed(st, k)) return std::nullopt;
    return st;
  }
  // Pass-through: the pairing follows the strands, i.e. conjugate by the
  // transposition tau of the two positions.
  std::vector<uint8_t> p(st.size());
  auto tau = [a, b](int x) { return x == a ? b : x == b ? a : x; };
  for (int x = 0; x < st.size(); ++x)
    p[x] = static_cast<uint8_t>(tau(st.partner(tau(x))));
  return RulingState(std::move(p));
}

SwitchDistribution enumerate_rulings(const BraidWord& w) {
  const int n = w.strands;
  if (n > 8)
    throw ResourceExceeded("ruling enumeration supports at most 8 strands, got " +
                           std::to_string(n));
  using Layer = std::unordered_map<uint64_t, std::map<int, mpz_class>>;
  const uint64_t home = RulingState::nested(n).pack();
  Layer layer;
  layer[home][0] = 1;
  for (int k : w.letters) {
    Layer next;
    for (const auto& [key, dist] : layer) {
      const RulingState st = RulingState::unpack(key, 2 * n);
      if (auto sw = step(st, k, true)) {
        auto& tgt = next[sw->pack()];
        for (const auto& [s, c] : dist) tgt[s + 1] += c;
      }
      if (auto ps = step(st, k, false)) {
        auto& tgt = next[ps->pack()];
        for (const auto& [s, c] : dist) tgt[s] += c;
      }
    }
    layer = std::move(next);
  }
  SwitchDistribution out;
  if (auto it = layer.find(home); it != layer.end()) out.counts = std::move(it->second);
  return out;
}

ZLaurent ruling_poly(const BraidWord& w) {
  ZLaurent r;
  for (const auto& [s, c] : enumerate_rulings(w).counts) r.add(s - w.strands, c);
  return r;
}

BpsSequence normalized_ruling_poly(const BraidWord& w) {
  const SwitchDistribution dist = enumerate_rulings(w);
  if (dist.counts.empty()) return BpsSequence{};
  const int shift = closure_components(w) - w.strands;
  std::vector<mpz_class> coeffs;
  for (const auto& [s, c] : dist.counts) {
    const int e = s + shift;
    if (e < 0 || e % 2 != 0)
      throw NotEvenPolynomial("z^" + std::to_string(e) + " term in z^ell * R(z)");
    const auto h = static_cast<std::size_t>(e / 2);
    if (coeffs.size() <= h) coeffs.resize(h + 1, 0);
    coeffs[h] += c;
  }
  return BpsSequence(std::move(coeffs));
}

BpsSequence bps_from_braid(const BraidWord& w) { return normalized_ruling_poly(w); }

}  // namespace rulings
