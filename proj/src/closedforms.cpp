#include "rulings/closedforms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rulings/errors.hpp"
#include "rulings/transforms.hpp"

namespace rulings {

void validate(const AdeLabel& label) {
  switch (label.family) {
    case AdeFamily::A:
      if (label.index < 1) throw std::invalid_argument("A_n requires n >= 1");
      return;
    case AdeFamily::D:
      if (label.index < 4) throw std::invalid_argument("D_n requires n >= 4");
      return;
    case AdeFamily::E:
      if (label.index < 6 || label.index > 8)
        throw std::invalid_argument("E_n requires n in {6, 7, 8}");
      return;
  }
  throw std::invalid_argument("unknown ADE family");
}

AdeLabel parse_ade_label(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("bad ADE label '" + text + "'");
  AdeLabel label{};
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': label.family = AdeFamily::A; break;
    case 'D': label.family = AdeFamily::D; break;
    case 'E': label.family = AdeFamily::E; break;
    default: throw std::invalid_argument("bad ADE label '" + text + "'");
  }
  const std::string digits = text.substr(1);
  if (digits.size() > 9 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("bad ADE label '" + text + "'");
  label.index = std::stoi(digits);
  validate(label);
  return label;
}

std::string ade_label_str(const AdeLabel& label) {
  const char f = label.family == AdeFamily::A ? 'A' : label.family == AdeFamily::D ? 'D' : 'E';
  return f + std::to_string(label.index);
}

DynkinGraph::DynkinGraph(int n, std::vector<std::pair<int, int>> es)
    : vertices(n), edges(std::move(es)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop edge");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw std::invalid_argument("graph: duplicate edge");
  }
}

BraidWord torus_braid(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("torus_braid: need n >= 1, m >= 0");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(m) * (n - 1));
  for (int rep = 0; rep < m; ++rep)
    for (int k = 1; k < n; ++k) letters.push_back(k);
  return BraidWord(n, std::move(letters));
}

BpsSequence torus_rtilde(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("torus_rtilde: need n, m >= 1");
  if (std::gcd(n, m) != 1)
    throw NotCoprime("torus knot requires gcd(n, m) = 1, got (" + std::to_string(n) + ", " +
                     std::to_string(m) + ")");
  const HalfLaurent ratio = exact_div(q_binomial(n + m, n), q_binomial(n + m, 1));
  // q^{-(n-1)(m-1)/2}; the s-shift (n-1)(m-1) is even precisely because the
  // pair is coprime.
  return to_zsq(ratio.shifted(-(n - 1) * (m - 1)));
}

namespace {

// Exact division by (1 - a^2), peeling from the top a-degree down.
AZPoly div_one_minus_a2(const AZPoly& p) {
  AZPoly rem = p;
  AZPoly quot;
  while (!rem.is_zero()) {
    const int d = rem.highest_a_degree();
    const HalfLaurent top = rem.a_slice(d);
    if (d < 2) throw DivisionInexact("not divisible by 1 - a^2", rem.str());
    // (1 - a^2) * (-top * a^{d-2}) has top slice -top*a^d.
    quot.sub_slice(top, d - 2);
    rem.sub_slice(top * mpz_class(-1), d - 2);
    rem.sub_slice(top, d);
  }
  return quot;
}

}  // namespace

AZPoly torus_homfly(int n, int m) {
  if (n < 2 || m < 1) throw std::invalid_argument("torus_homfly: need n >= 2, m >= 1");
  if (std::gcd(n, m) != 1)
    throw NotCoprime("torus knot requires gcd(n, m) = 1, got (" + std::to_string(n) + ", " +
                     std::to_string(m) + ")");

  const AZPoly a2 = AZPoly::monomial(1, 2, 0);
  AZPoly numer;
  for (int j = 0; j <= n - 1; ++j) {
    const int expo = j * m + (n - j - 1) * (n - j) / 2;
    HalfLaurent coef = q_binomial(n - 1, j) * q_pow(expo);
    if (j % 2 == 1) coef = -coef;
    AZPoly prod = AZPoly::from_slice(coef, 0);
    for (int i = -(n - 1 - j); i <= j; ++i)
      prod *= AZPoly::from_slice(q_pow(i), 0) - a2;
    numer += prod;
  }
  numer *= AZPoly::from_slice(HalfLaurent(1) - q_pow(1), 0);

  const AZPoly peeled = div_one_minus_a2(numer);
  const HalfLaurent denom = q_factorial(n - 1) * (HalfLaurent(1) - q_pow(n));

  AZPoly out;
  for (int ae = peeled.lowest_a_degree(); ae <= peeled.highest_a_degree(); ++ae) {
    const HalfLaurent slice = peeled.a_slice(ae);
    if (slice.is_zero()) continue;
    out.add_slice(exact_div(slice, denom), ae);
  }
  // the prefactor (a s^{-1})^{(n-1)(m-1)}
  const int mu = (n - 1) * (m - 1);
  return out.shifted(mu, -mu);
}

std::string homfly_str(const AZPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int ae = p.lowest_a_degree(); ae <= p.highest_a_degree(); ++ae) {
    const HalfLaurent slice = p.a_slice(ae);
    if (slice.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << s_laurent_to_z(slice).str() << ")";
    if (ae != 0) os << "*a^" << ae;
  }
  return os.str();
}

mpz_class binom0(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

BpsSequence ade_bps(const AdeLabel& label) {
  validate(label);
  const int n = label.index;
  std::vector<mpz_class> seq;
  switch (label.family) {
    case AdeFamily::A: {
      if (n % 2 == 1) {
        const long d = (n + 1) / 2;
        for (long h = 0; h <= d; ++h) seq.push_back(binom0(d + h, d - h));
      } else {
        const long d = n / 2;
        for (long h = 0; h <= d; ++h) seq.push_back(binom0(d + h + 1, d - h));
      }
      break;
    }
    case AdeFamily::D: {
      const long d = n / 2 + 1;
      for (long h = 0; h <= d; ++h) {
        if (n % 2 == 0)
          seq.push_back(binom0(d + h - 3, d - h) + 2 * binom0(d + h - 3, d - h - 1) +
                        binom0(d + h - 2, d - h - 2));
        else
          seq.push_back(binom0(d + h - 2, d - h) + 2 * binom0(d + h - 2, d - h - 1) +
                        binom0(d + h - 1, d - h - 2));
      }
      break;
    }
    case AdeFamily::E: {
      if (n == 6)
        seq = {5, 10, 6, 1};
      else if (n == 7)
        seq = {2, 11, 15, 7, 1};
      else
        seq = {7, 21, 21, 8, 1};
      break;
    }
  }
  return BpsSequence(std::move(seq));
}

DynkinGraph ade_graph(const AdeLabel& label) {
  validate(label);
  const int n = label.index;
  std::vector<std::pair<int, int>> edges;
  switch (label.family) {
    case AdeFamily::A:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case AdeFamily::D:
      for (int i = 1; i < n - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n - 1);
      edges.emplace_back(n - 2, n);
      break;
    case AdeFamily::E:
      for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(3, n);
      break;
  }
  return DynkinGraph(n, std::move(edges));
}

BraidWord ade_braid(const AdeLabel& label) {
  validate(label);
  const int n = label.index;
  std::vector<int> ls;
  switch (label.family) {
    case AdeFamily::A:
      return BraidWord(2, std::vector<int>(static_cast<std::size_t>(n) + 1, 1));
    case AdeFamily::D:
      ls.assign(static_cast<std::size_t>(n) - 2, 1);
      ls.insert(ls.end(), {2, 1, 1, 2});
      return BraidWord(3, std::move(ls));
    case AdeFamily::E:
      ls.assign(static_cast<std::size_t>(n) - 3, 1);
      ls.insert(ls.end(), {2, 1, 1, 1, 2});
      return BraidWord(3, std::move(ls));
  }
  throw std::invalid_argument("unknown ADE family");
}

namespace {

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
  std::vector<mpz_class> r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}

std::vector<mpz_class> poly_add(const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
  std::vector<mpz_class> r = x;
  if (r.size() < y.size()) r.resize(y.size(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  return r;
}

}  // namespace

std::vector<mpz_class> independence_poly(const DynkinGraph& g) {
  const int n = g.vertices;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  std::vector<mpz_class> total{1};
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  // per-vertex polynomials: root excluded / root included
  std::vector<std::vector<mpz_class>> out(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<mpz_class>> inc(static_cast<std::size_t>(n) + 1);

  for (int root = 1; root <= n; ++root) {
    if (visited[root]) continue;
    // iterative DFS; order has parents before children
    std::vector<int> order;
    std::vector<int> stack{root};
    visited[root] = 1;
    parent[root] = 0;
    std::size_t comp_edges = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      comp_edges += adj[v].size();
      for (int u : adj[v]) {
        if (u == parent[v]) continue;
        if (visited[u]) throw NotAForest("graph contains a cycle");
        visited[u] = 1;
        parent[u] = v;
        stack.push_back(u);
      }
    }
    // each component edge was counted from both ends
    if (comp_edges != 2 * (order.size() - 1)) throw NotAForest("graph contains a cycle");

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      std::vector<mpz_class> ex{1};       // v excluded
      std::vector<mpz_class> in{0, 1};    // v included: one vertex so far
      for (int u : adj[v]) {
        if (u == parent[v]) continue;
        ex = poly_mul(ex, poly_add(out[u], inc[u]));
        in = poly_mul(in, out[u]);
      }
      out[v] = std::move(ex);
      inc[v] = std::move(in);
    }
    total = poly_mul(total, poly_add(out[root], inc[root]));
  }
  return total;
}

mpz_class d_poly_f(long n, long k) {
  const mpz_class N = n, K = k;
  return N * (N - 2 * K + 1) * (N - 2 * K + 2) + K * (K - 1) * (N - K);
}

mpz_class d_poly_F(long n, long k) {
  const mpz_class N = n, K = k;
  return -3 * K * K * K * K + (20 * N + 4) * K * K * K -
         (50 * N * N + 20 * N - 1) * K * K +
         (34 * N * N * N + 60 * N * N - 8 * N - 2) * K -
         6 * N * N * N * N - 24 * N * N * N - 6 * N * N;
}

mpz_class mk_dn(long n, long k) {
  if (n < 4 || k < 0) throw std::invalid_argument("mk_dn: need n >= 4, k >= 0");
  return binom0(n - k, k) + binom0(n - k - 1, k - 1) + binom0(n - k, k - 2);
}

std::vector<double> a_odd_factor_roots(int delta) {
  if (delta < 0) throw std::invalid_argument("a_odd_factor_roots: delta must be >= 0");
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(delta));
  const long double pi = 3.14159265358979323846264338327950288L;
  for (int j = 0; j < delta; ++j) {
    const long double s = sinl((2 * j + 1) * pi / (2 * (2 * delta + 1)));
    roots.push_back(static_cast<double>(4.0L * s * s));
  }
  return roots;
}

}  // namespace rulings
