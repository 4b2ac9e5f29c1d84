#include "rulings/transforms.hpp"

#include <stdexcept>
#include <vector>

namespace rulings {

namespace {

// binom(n, 0..n) computed incrementally; exact at every step.
std::vector<mpz_class> binom_row(int n) {
  std::vector<mpz_class> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int t = 1; t <= n; ++t) {
    row[t] = row[t - 1] * (n - t + 1);
    mpz_divexact_ui(row[t].get_mpz_t(), row[t].get_mpz_t(), static_cast<unsigned long>(t));
  }
  return row;
}

}  // namespace

BpsSequence to_zsq(const HalfLaurent& L) {
  for (const auto& [e, c] : L.terms()) {
    (void)c;
    if (e % 2 != 0) throw FractionalPower("to_zsq: odd s-exponent " + std::to_string(e));
  }
  for (const auto& [e, c] : L.terms())
    if (L.coeff(-e) != c) throw NotPalindromic("to_zsq: input is not q-palindromic");
  if (L.is_zero()) return BpsSequence{};

  const int d = L.degree() / 2;
  // dense over q-exponents -d..d; only the peeling loop uses dense storage
  std::vector<mpz_class> cur(2 * static_cast<std::size_t>(d) + 1);
  for (const auto& [e, c] : L.terms()) cur[e / 2 + d] = c;

  std::vector<mpz_class> out(static_cast<std::size_t>(d) + 1);
  for (int h = d; h >= 0; --h) {
    mpz_class ch = cur[h + d];
    out[h] = ch;
    if (ch == 0) continue;
    // coefficient of q^j in (q - 2 + 1/q)^h is (-1)^{h-j} binom(2h, h-j)
    auto row = binom_row(2 * h);
    for (int j = -h; j <= h; ++j) {
      mpz_class t = ch * row[h - j];
      if ((h - j) % 2 != 0)
        cur[j + d] += t;
      else
        cur[j + d] -= t;
    }
  }
  for (const auto& c : cur)
    if (c != 0) throw InvariantViolation("to_zsq: nonzero residue after peeling");
  return BpsSequence(std::move(out));
}

HalfLaurent from_zsq(const BpsSequence& c) {
  const HalfLaurent zsq = q_pow(1) + HalfLaurent(mpz_class(-2)) + q_pow(-1);
  HalfLaurent acc;
  HalfLaurent pw = HalfLaurent::one();
  for (std::size_t h = 0; h < c.coeffs.size(); ++h) {
    if (h) pw *= zsq;
    acc += pw * c.coeffs[h];
  }
  return acc;
}

ZLaurent s_laurent_to_z(const HalfLaurent& c) {
  for (const auto& [e, v] : c.terms()) {
    mpz_class expect = (e % 2 == 0) ? v : mpz_class(-v);
    if (c.coeff(-e) != expect)
      throw NotZExpressible("s_laurent_to_z: input breaks the s -> -1/s symmetry");
  }
  ZLaurent out;
  HalfLaurent cur = c;
  while (!cur.is_zero()) {
    const int m = cur.degree();
    if (m < 0) throw NotZExpressible("s_laurent_to_z: peel ran below degree zero");
    mpz_class lead = cur.coeff(m);
    out.add(m, lead);
    // subtract lead * (s - 1/s)^m = lead * sum_j binom(m,j)(-1)^j s^{m-2j}
    auto row = binom_row(m);
    for (int j = 0; j <= m; ++j) {
      mpz_class t = lead * row[j];
      if (j % 2 != 0)
        cur.add(m - 2 * j, t);
      else
        cur.sub(m - 2 * j, t);
    }
  }
  return out;
}

HalfLaurent q_factorial(int r) {
  if (r < 0) throw std::invalid_argument("q_factorial: negative argument");
  HalfLaurent acc = HalfLaurent::one();
  for (int i = 1; i <= r; ++i) acc *= HalfLaurent::one() - q_pow(i);
  return acc;
}

HalfLaurent q_binomial(int a, int b) {
  if (b < 0 || b > a) throw std::invalid_argument("q_binomial: need 0 <= b <= a");
  // multiply/divide alternately so every intermediate is the genuine
  // q-binomial [a-b+i choose i]_q, a polynomial with small degree
  HalfLaurent acc = HalfLaurent::one();
  for (int i = 1; i <= b; ++i) {
    acc *= HalfLaurent::one() - q_pow(a - b + i);
    acc = exact_div(acc, HalfLaurent::one() - q_pow(i));
  }
  return acc;
}

HalfLaurent exact_div(const HalfLaurent& P, const HalfLaurent& Q) {
  if (Q.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  if (P.is_zero()) return {};
  const int pl = P.low_degree();
  const int ql = Q.low_degree();
  HalfLaurent r = P.shifted(-pl);
  const HalfLaurent q0 = Q.shifted(-ql);
  const int dq = q0.degree();
  const mpz_class qlead = q0.coeff(dq);

  HalfLaurent quot;
  while (!r.is_zero() && r.degree() >= dq) {
    const int dr = r.degree();
    mpz_class rlead = r.coeff(dr);
    if (!mpz_divisible_p(rlead.get_mpz_t(), qlead.get_mpz_t()))
      throw DivisionInexact("exact_div: leading coefficient not divisible",
                            r.shifted(pl).str());
    mpz_class t = rlead / qlead;
    quot.add(dr - dq, t);
    r -= q0.shifted(dr - dq) * t;
  }
  if (!r.is_zero())
    throw DivisionInexact("exact_div: nonzero remainder", r.shifted(pl).str());
  return quot.shifted(pl - ql);
}

}  // namespace rulings
