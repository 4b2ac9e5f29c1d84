#pragma once

#include "rulings/bps.hpp"
#include "rulings/laurent.hpp"

namespace rulings {

/**
 * Genus-expansion transform: writes a q-palindromic Laurent polynomial with
 * integer q-powers as an integer combination of powers of z^2 = q - 2 + 1/q.
 * Returns (c_0, ..., c_m) with L = sum_h c_h (q - 2 + 1/q)^h.
 *
 * Throws FractionalPower if any odd s-exponent is present, NotPalindromic if
 * L(q) != L(1/q). Inverse of from_zsq.
 */
BpsSequence to_zsq(const HalfLaurent& L);

// Expansion of sum_h c_h (q - 2 + 1/q)^h back into the s-ring.
HalfLaurent from_zsq(const BpsSequence& c);

/**
 * Rewrites an s-Laurent polynomial as a polynomial in z = s - s^{-1} by
 * peeling the top s-term against (s - s^{-1})^m. Requires the symmetry
 * c(s) = c(-s^{-1}), i.e. coeff(-e) = (-1)^e coeff(e); throws
 * NotZExpressible otherwise.
 */
ZLaurent s_laurent_to_z(const HalfLaurent& c);

// [r]_q! = prod_{i=1}^{r} (1 - q^i), with [0]_q! = 1.
HalfLaurent q_factorial(int r);

/**
 * Gaussian binomial [a choose b]_q = [a]_q!/([b]_q! [a-b]_q!), computed by
 * alternating multiply/exact-divide so every intermediate is a genuine
 * polynomial. A DivisionInexact escaping from here is an arithmetic bug.
 */
HalfLaurent q_binomial(int a, int b);

/**
 * Exact division over the integers. Throws DivisionInexact (with the
 * remainder attached) when Q does not divide P in Z[s, s^{-1}];
 * std::invalid_argument when Q = 0.
 */
HalfLaurent exact_div(const HalfLaurent& P, const HalfLaurent& Q);

}  // namespace rulings
