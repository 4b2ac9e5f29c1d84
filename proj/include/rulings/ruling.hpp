#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rulings/bps.hpp"
#include "rulings/braid.hpp"
#include "rulings/laurent.hpp"

namespace rulings {

/**
 * DP state for ruling enumeration on the rainbow closure of an n-strand
 * braid: a fixed-point-free involution of the 2n slice positions (0-based
 * here; positions 0..n-1 are the braid strands bottom up, n..2n-1 the
 * returning rainbow strands). partner(i) is the position paired with i.
 */
class RulingState {
 public:
  explicit RulingState(std::vector<uint8_t> partner);

  // The nested pairing partner(i) = 2n-1-i: the state at both ends of the
  // rainbow closure.
  static RulingState nested(int n);

  int size() const { return static_cast<int>(partner_.size()); }  // = 2n
  int partner(int i) const { return partner_[i]; }

  // Packs into 4-bit nibbles; valid for size() <= 16 (n <= 8).
  uint64_t pack() const;
  static RulingState unpack(uint64_t key, int size);

  bool operator==(const RulingState&) const = default;

 private:
  RulingState() = default;
  std::vector<uint8_t> partner_;
};

/**
 * Normality test for a switch at crossing sigma_k (k is the 1-based
 * generator index; the crossing acts on positions k-1, k): the two eyes
 * through the crossing must be distinct and their position intervals nested
 * or disjoint, never interleaved.
 */
bool switch_allowed(const RulingState& st, int k);

/**
 * One crossing of the DP. Paired strands may not cross (partner(k-1) = k
 * kills both branches: returns nullopt). A switch keeps the pairing
 * (requires switch_allowed); a pass-through conjugates the involution by the
 * transposition of the two positions.
 */
std::optional<RulingState> step(const RulingState& st, int k, bool do_switch);

// counts[s] = number of valid rulings with exactly s switches.
struct SwitchDistribution {
  std::map<int, mpz_class> counts;
  bool operator==(const SwitchDistribution&) const = default;
};

/**
 * Enumerates all Z/2-graded normal rulings of the rainbow closure: walks the
 * letters left to right from the nested state, branching at each crossing,
 * and counts the paths that return to the nested state. Layered (one memo
 * table per letter position, keyed by packed state), exact counts.
 * Throws ResourceExceeded for words on more than 8 strands.
 */
SwitchDistribution enumerate_rulings(const BraidWord& w);

// R(z) = sum_s counts[s] * z^{s-n}.
ZLaurent ruling_poly(const BraidWord& w);

/**
 * R~(z) = z^ell * R(z) as a polynomial in z^2, returned as its coefficient
 * sequence. Throws NotEvenPolynomial if an odd or negative power survives
 * (impossible for rainbow closures; reaching it means a DP bug).
 */
BpsSequence normalized_ruling_poly(const BraidWord& w);

// Same value under its BPS-sequence name: for singularity braids this is the
// sequence (n_0, ..., n_delta).
BpsSequence bps_from_braid(const BraidWord& w);

}  // namespace rulings
