#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "rulings/azpoly.hpp"
#include "rulings/bps.hpp"
#include "rulings/braid.hpp"

namespace rulings {

enum class AdeFamily { A, D, E };

// A_n (n >= 1), D_n (n >= 4), E_n (n in {6,7,8}).
struct AdeLabel {
  AdeFamily family;
  int index;
};

// Validates the index range; throws std::invalid_argument.
void validate(const AdeLabel& label);
// Parses "A12" / "d5" / "E8"; throws std::invalid_argument.
AdeLabel parse_ade_label(const std::string& text);
std::string ade_label_str(const AdeLabel& label);

/**
 * Simply laced Dynkin diagram as a plain graph: vertices 1..N, undirected
 * edges. Construction checks ranges and rejects loops/duplicates; acyclicity
 * is checked where it matters (independence_poly).
 */
struct DynkinGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  DynkinGraph() = default;
  DynkinGraph(int n, std::vector<std::pair<int, int>> es);
};

// --- torus links T(n, m) ---

// The braid (sigma_1 ... sigma_{n-1})^m on n strands.
BraidWord torus_braid(int n, int m);

/**
 * Closed form for the normalized ruling polynomial of the (n,m) torus knot:
 * q^{-(n-1)(m-1)/2} [m+n choose n]_q / [m+n choose 1]_q re-expanded in z^2.
 * Requires n, m >= 1 coprime (NotCoprime otherwise).
 */
BpsSequence torus_rtilde(int n, int m);

/**
 * HOMFLY-PT polynomial of the (n,m) torus knot from the q-series formula:
 * builds the full numerator, then divides by (1 - a^2) and by
 * [n-1]_q! (1 - q^n), asserting both divisions exact. Requires n >= 2,
 * gcd(n,m) = 1. The lowest a-degree is (n-1)(m-1) and that coefficient
 * equals z*R of the torus braid.
 */
AZPoly torus_homfly(int n, int m);

// Human-readable HOMFLY form with z-coefficients per a-power.
std::string homfly_str(const AZPoly& p);

// --- ADE singularities ---

// Closed-form BPS sequences (binomial forms for A/D, literal vectors for E).
BpsSequence ade_bps(const AdeLabel& label);

// Path for A_n; path 1..n-2 with n-1 and n both attached to n-2 for D_n;
// for E_n the path 1..n-1 with vertex n attached to vertex 3.
DynkinGraph ade_graph(const AdeLabel& label);

// A_n: sigma_1^{n+1} on 2 strands; D_n: sigma_1^{n-2} s2 s1^2 s2 on 3;
// E_n: sigma_1^{n-3} s2 s1^3 s2 on 3.
BraidWord ade_braid(const AdeLabel& label);

/**
 * Independence polynomial coefficients (m_0, m_1, ...): m_k counts the
 * independent vertex sets of size k. Rooted in/out DP per component,
 * convolved across components. Throws NotAForest on a cycle.
 */
std::vector<mpz_class> independence_poly(const DynkinGraph& g);

// --- type-D proof polynomials ---

// f(n,k) = n(n-2k+1)(n-2k+2) + k(k-1)(n-k).
mpz_class d_poly_f(long n, long k);

// F(n,k) = -3k^4 + (20n+4)k^3 - (50n^2+20n-1)k^2
//          + (34n^3+60n^2-8n-2)k - 6n^4 - 24n^3 - 6n^2
// (= f(n,k-1)f(n,k+1) - f(n,k)^2).
mpz_class d_poly_F(long n, long k);

// m_k of the D_n diagram in closed form:
// binom(n-k,k) + binom(n-k-1,k-1) + binom(n-k,k-2), binom(a,b) = 0 outside
// 0 <= b <= a. Requires n >= 4, k >= 0.
mpz_class mk_dn(long n, long k);

// binom(a,b) with the zero convention for b < 0, b > a, or a < 0.
mpz_class binom0(long a, long b);

/**
 * The delta negated roots of the odd type-A factor: values
 * 4 sin^2((2j+1) pi / (2(2delta+1))), j = 0..delta-1. The monic product
 * prod_j (w + r_j) reconstructs p_delta(w) = sum_h binom(delta+h, 2h) w^h
 * up to floating-point error (all arithmetic elsewhere stays exact; this is
 * the library's only float surface).
 */
std::vector<double> a_odd_factor_roots(int delta);

}  // namespace rulings
