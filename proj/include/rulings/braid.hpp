#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rulings/errors.hpp"

namespace rulings {

/**
 * A positive braid word: generator indices sigma_1..sigma_{n-1} on n strands,
 * stored as the sequence of 1-based indices. Only positive generators exist
 * here. The empty word on any strand count is valid.
 */
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const BraidWord&) const = default;
};

struct ClassicalInvariants {
  long e;    // crossing count
  long tb;   // e - strands
  long mu;   // tb + 1
  int ell;   // components of the closure
  std::optional<long> delta;  // (mu + ell - 1)/2 when even and >= 0
};

// Image of each strand under the word, composing the transpositions
// (i, i+1) left to right; result[i] is the 0-based image of strand i.
std::vector<int> permutation(const BraidWord& w);

// Number of cycles of permutation(w) = number of components of the closure.
int closure_components(const BraidWord& w);

ClassicalInvariants classical_invariants(const BraidWord& w);

// Adds n-1 parallel strands from the bottom: every letter index grows by
// n-1 and the strand count becomes n + g.strands - 1.
BraidWord shift_embed(const BraidWord& g, int n);

// Lexicographically least cyclic rotation of the letters.
BraidWord canonical_rotation(const BraidWord& w);

// Letters rotated left by r (helper for rotation-invariance checks).
BraidWord rotated(const BraidWord& w, int r);

/**
 * Decomposition at the unique peak of the grouped index sequence. When the
 * run indices satisfy i_1 < ... < i_k > ... > i_M, returns the peak block
 * shifted down to a word gamma = sigma_1^{e_k} on m = strands - n + 1
 * strands (n = i_k) plus the two flanks on n strands, so that
 * beta1 * shift_embed(gamma, n) * beta2 reassembles the input exactly.
 */
struct SinglePeakParts {
  BraidWord beta1;
  BraidWord gamma;
  BraidWord beta2;
  int n;
  int m;
};
std::optional<SinglePeakParts> single_peak_decompose(const BraidWord& w);

/**
 * Parses the CLI word syntax: comma-separated generator indices with
 * optional caret exponents and an optional trailing strand count, e.g.
 * "1^2,2^2,3^2,4^2,3^2,2,1@5". Defaults to max index + 1 strands.
 * Throws std::invalid_argument on malformed text.
 */
BraidWord parse_braid_word(const std::string& text);

// "1,1,2" — plain comma-joined letters (cache format).
std::string word_csv(const BraidWord& w);
// "1^2,2@3" — grouped with exponents, always carrying the strand count.
std::string word_text(const BraidWord& w);

}  // namespace rulings
