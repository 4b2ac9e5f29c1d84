#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "rulings/closedforms.hpp"
#include "rulings/errors.hpp"
#include "rulings/ruling.hpp"

using namespace rulings;

namespace {

// Memo-free reference enumeration with its own pairing mechanics: walks all
// 2^e switch subsets and counts the paths that come home.
using Pairing = std::vector<int>;

Pairing oracle_home(int n) {
  Pairing h(2 * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = static_cast<int>(h.size()) - 1 - i;
  return h;
}

bool oracle_interleaved(const Pairing& p, int x, int y) {
  const int a1 = std::min(x, p[x]), a2 = std::max(x, p[x]);
  const int b1 = std::min(y, p[y]), b2 = std::max(y, p[y]);
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

void oracle_walk(const Pairing& p, const std::vector<int>& letters, std::size_t idx,
                 int switches, const Pairing& home, std::map<int, long>& out) {
  if (idx == letters.size()) {
    if (p == home) out[switches] += 1;
    return;
  }
  const int a = letters[idx] - 1, b = letters[idx];
  if (p[a] == b) return;
  if (!oracle_interleaved(p, a, b)) oracle_walk(p, letters, idx + 1, switches + 1, home, out);
  Pairing q = p;  // pass: swap the two entries, then repair the back pointers
  std::swap(q[a], q[b]);
  q[q[a]] = a;
  q[q[b]] = b;
  oracle_walk(q, letters, idx + 1, switches, home, out);
}

std::map<int, long> oracle_enumerate(const BraidWord& w) {
  std::map<int, long> out;
  oracle_walk(oracle_home(w.strands), w.letters, 0, 0, oracle_home(w.strands), out);
  return out;
}

bool same_distribution(const SwitchDistribution& got, const std::map<int, long>& want) {
  if (got.counts.size() != want.size()) return false;
  for (const auto& [s, c] : want)
    if (got.counts.count(s) == 0 || got.counts.at(s) != c) return false;
  return true;
}

BraidWord random_word(std::mt19937_64& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> ld(0, max_len), gen(1, strands - 1);
  std::vector<int> ls;
  const int L = ld(rng);
  for (int i = 0; i < L; ++i) ls.push_back(gen(rng));
  return BraidWord(strands, std::move(ls));
}

}  // namespace

TEST_CASE("ruling states") {
  const RulingState n2 = RulingState::nested(2);
  CHECK(n2.size() == 4);
  CHECK(n2.partner(0) == 3);
  CHECK(n2.partner(1) == 2);
  const RulingState n3 = RulingState::nested(3);
  for (int i = 0; i < 6; ++i) CHECK(n3.partner(i) == 5 - i);

  CHECK(RulingState::unpack(n2.pack(), 4) == n2);
  const RulingState inter({2, 3, 0, 1});
  CHECK(RulingState::unpack(inter.pack(), 4) == inter);
  CHECK(inter.pack() != n2.pack());

  CHECK_THROWS_AS(RulingState({0, 1, 2, 3}), std::invalid_argument);  // fixed points
  CHECK_THROWS_AS(RulingState({1, 0, 3}), std::invalid_argument);     // odd size
  CHECK_THROWS_AS(RulingState({2, 2, 0, 1}), std::invalid_argument);  // not involutive
  CHECK_THROWS_AS(RulingState(std::vector<uint8_t>{}), std::invalid_argument);
}

TEST_CASE("switch normality") {
  const RulingState nested = RulingState::nested(2);      // {(0,3),(1,2)} nested
  const RulingState inter({2, 3, 0, 1});                  // {(0,2),(1,3)} interleaved
  const RulingState paired({1, 0, 3, 2});                 // {(0,1),(2,3)}
  CHECK(switch_allowed(nested, 1));
  CHECK_FALSE(switch_allowed(inter, 1));
  CHECK_FALSE(switch_allowed(paired, 1));  // crossing inside one eye
  CHECK_THROWS_AS(switch_allowed(nested, 0), std::invalid_argument);
  CHECK_THROWS_AS(switch_allowed(nested, 4), std::invalid_argument);

  // disjoint intervals on 3 strands: pairs {(0,1),(2,5),(3,4)} at crossing 2
  // touch positions 1,2 with intervals [0,1] and [2,5]
  const RulingState dis({1, 0, 5, 4, 3, 2});
  CHECK(switch_allowed(dis, 2));
}

TEST_CASE("single crossing step") {
  const RulingState nested = RulingState::nested(2);
  const auto sw = step(nested, 1, true);
  REQUIRE(sw.has_value());
  CHECK(*sw == nested);

  const auto ps = step(nested, 1, false);
  REQUIRE(ps.has_value());
  CHECK(*ps == RulingState({2, 3, 0, 1}));

  const RulingState inter({2, 3, 0, 1});
  CHECK_FALSE(step(inter, 1, true).has_value());  // normality fails
  const auto back = step(inter, 1, false);
  REQUIRE(back.has_value());
  CHECK(*back == nested);

  const RulingState paired({1, 0, 3, 2});
  CHECK_FALSE(step(paired, 1, true).has_value());
  CHECK_FALSE(step(paired, 1, false).has_value());
}

TEST_CASE("enumeration on the pinned examples") {
  auto counts = [](const BraidWord& w) { return enumerate_rulings(w).counts; };
  CHECK(counts(BraidWord(2, {1, 1, 1})) ==
        std::map<int, mpz_class>({{1, 2}, {3, 1}}));
  CHECK(counts(BraidWord(2, {1, 1})) == std::map<int, mpz_class>({{0, 1}, {2, 1}}));
  CHECK(counts(BraidWord(2, {1})) == std::map<int, mpz_class>({{1, 1}}));
  CHECK(counts(BraidWord(3, {})) == std::map<int, mpz_class>({{0, 1}}));

  CHECK(ruling_poly(BraidWord(2, {1, 1, 1})) ==
        mpz_class(2) * ZLaurent::monomial(1, -1) + ZLaurent::monomial(1, 1));
  CHECK(ruling_poly(BraidWord(2, {1})) == ZLaurent::monomial(1, -1));
  CHECK(ruling_poly(BraidWord(1, {})) == ZLaurent::monomial(1, -1));
}

TEST_CASE("normalized ruling polynomials") {
  CHECK(normalized_ruling_poly(BraidWord(5, {1, 1, 2, 2, 3, 3, 4, 4, 3, 3, 2, 1})) ==
        BpsSequence{4, 20, 33, 24, 8, 1});
  CHECK(normalized_ruling_poly(BraidWord(3, {1, 1, 1, 2, 1, 1, 1, 2})) ==
        BpsSequence{5, 10, 6, 1});  // E6 braid
  CHECK(normalized_ruling_poly(BraidWord(2, {1, 1, 1, 1})) == BpsSequence{1, 3, 1});
  CHECK(bps_from_braid(BraidWord(2, {1, 1, 1, 1, 1})) == BpsSequence{3, 4, 1});
  CHECK(bps_from_braid(BraidWord(3, {1, 1, 2, 1, 1, 2})) == BpsSequence{1, 3, 4, 1});  // D4
  CHECK(bps_from_braid(torus_braid(3, 4)) == BpsSequence{5, 10, 6, 1});
  CHECK(bps_from_braid(BraidWord(2, {})) == BpsSequence{1});

  // stability under split strands
  CHECK(bps_from_braid(BraidWord(5, {1, 1})) == BpsSequence{1, 1});
  CHECK(bps_from_braid(BraidWord(7, {3, 3, 3})) == BpsSequence{2, 1});
}

TEST_CASE("switch-count parity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> sd(2, 4);
    const BraidWord w = random_word(rng, sd(rng), 10);
    const int n = w.strands, ell = closure_components(w);
    for (const auto& [s, c] : enumerate_rulings(w).counts) {
      CHECK(c > 0);
      CHECK((s - (n - ell)) % 2 == 0);
    }
  }
}

TEST_CASE("memoized DP equals the exhaustive walk") {
  // every word on <= 3 strands with length <= 6
  for (int strands = 2; strands <= 3; ++strands) {
    for (int len = 0; len <= 6; ++len) {
      std::vector<int> ls(static_cast<std::size_t>(len), 1);
      for (;;) {
        const BraidWord w(strands, ls);
        CHECK(same_distribution(enumerate_rulings(w), oracle_enumerate(w)));
        int i = len - 1;
        while (i >= 0 && ls[i] == strands - 1) ls[i--] = 1;
        if (i < 0) break;
        ++ls[i];
      }
    }
  }
  // random 4-strand words up to length 8
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const BraidWord w = random_word(rng, 4, 8);
    CHECK(same_distribution(enumerate_rulings(w), oracle_enumerate(w)));
  }
}

TEST_CASE("rotation invariance of the normalized polynomial") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> sd(2, 4);
    const BraidWord w = random_word(rng, sd(rng), 10);
    if (w.length() == 0) continue;
    std::uniform_int_distribution<int> rd(0, w.length() - 1);
    CHECK(normalized_ruling_poly(w) == normalized_ruling_poly(rotated(w, rd(rng))));
    CHECK(normalized_ruling_poly(w) == normalized_ruling_poly(canonical_rotation(w)));
  }
}

TEST_CASE("type-D recursion on the braid words") {
  // R~_{D_n} = z^2 R~_{A_{n-1}} + (z^2 + 1) R~_{A_{n-3}} for 4 <= n <= 10
  for (int n = 4; n <= 10; ++n) {
    const BpsSequence d = bps_from_braid(ade_braid({AdeFamily::D, n}));
    const BpsSequence a1 = bps_from_braid(ade_braid({AdeFamily::A, n - 1}));
    const BpsSequence a3 = bps_from_braid(ade_braid({AdeFamily::A, n - 3}));
    std::vector<mpz_class> want(d.coeffs.size(), 0);
    for (std::size_t h = 0; h < want.size(); ++h) {
      if (h >= 1 && h - 1 < a1.coeffs.size()) want[h] += a1.coeffs[h - 1];
      if (h >= 1 && h - 1 < a3.coeffs.size()) want[h] += a3.coeffs[h - 1];
      if (h < a3.coeffs.size()) want[h] += a3.coeffs[h];
    }
    CHECK(d.coeffs == want);
  }
}

TEST_CASE("strand bound") {
  CHECK_NOTHROW(enumerate_rulings(BraidWord(8, {})));
  CHECK_THROWS_AS(enumerate_rulings(BraidWord(9, {})), ResourceExceeded);
  CHECK_THROWS_AS(bps_from_braid(BraidWord(9, {1, 2})), ResourceExceeded);
}
