#include "rulings/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rulings {

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (strands < 1) throw std::invalid_argument("BraidWord: strand count must be >= 1");
  for (int k : letters)
    if (k < 1 || k > strands - 1)
      throw std::invalid_argument("BraidWord: letter " + std::to_string(k) +
                                  " out of range on " + std::to_string(strands) + " strands");
}

std::vector<int> permutation(const BraidWord& w) {
  std::vector<int> p(w.strands);
  std::iota(p.begin(), p.end(), 0);
  for (int k : w.letters) {
    const int a = k - 1, b = k;
    for (int& v : p) {
      if (v == a)
        v = b;
      else if (v == b)
        v = a;
    }
  }
  return p;
}

int closure_components(const BraidWord& w) {
  const std::vector<int> p = permutation(w);
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return cycles;
}

ClassicalInvariants classical_invariants(const BraidWord& w) {
  ClassicalInvariants ci;
  ci.e = w.length();
  ci.tb = ci.e - w.strands;
  ci.mu = ci.tb + 1;
  ci.ell = closure_components(w);
  const long t = ci.mu + ci.ell - 1;
  if (t >= 0 && t % 2 == 0) ci.delta = t / 2;
  return ci;
}

BraidWord shift_embed(const BraidWord& g, int n) {
  if (n < 1) throw std::invalid_argument("shift_embed: n must be >= 1");
  std::vector<int> ls = g.letters;
  for (int& k : ls) k += n - 1;
  return BraidWord(n + g.strands - 1, std::move(ls));
}

BraidWord rotated(const BraidWord& w, int r) {
  const int L = w.length();
  if (L == 0) return w;
  r = ((r % L) + L) % L;
  std::vector<int> ls;
  ls.reserve(L);
  ls.insert(ls.end(), w.letters.begin() + r, w.letters.end());
  ls.insert(ls.end(), w.letters.begin(), w.letters.begin() + r);
  return BraidWord(w.strands, std::move(ls));
}

BraidWord canonical_rotation(const BraidWord& w) {
  const int L = w.length();
  if (L == 0) return w;
  std::vector<int> best = w.letters;
  std::vector<int> cur = w.letters;
  for (int r = 1; r < L; ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return BraidWord(w.strands, std::move(best));
}

std::optional<SinglePeakParts> single_peak_decompose(const BraidWord& w) {
  if (w.letters.empty()) return std::nullopt;

  // grouped run-length form
  std::vector<std::pair<int, int>> runs;  // (index, count)
  for (int k : w.letters) {
    if (!runs.empty() && runs.back().first == k)
      ++runs.back().second;
    else
      runs.emplace_back(k, 1);
  }
  const int M = static_cast<int>(runs.size());
  int peak = 0;
  for (int i = 1; i < M; ++i)
    if (runs[i].first > runs[peak].first) peak = i;
  for (int i = 0; i < peak; ++i)
    if (runs[i].first >= runs[i + 1].first) return std::nullopt;
  for (int i = peak; i + 1 < M; ++i)
    if (runs[i].first <= runs[i + 1].first) return std::nullopt;

  const int n = runs[peak].first;
  const int m = w.strands - n + 1;
  std::vector<int> left, right;
  for (int i = 0; i < peak; ++i) left.insert(left.end(), runs[i].second, runs[i].first);
  for (int i = peak + 1; i < M; ++i) right.insert(right.end(), runs[i].second, runs[i].first);
  SinglePeakParts parts{
      BraidWord(n, std::move(left)),
      BraidWord(m, std::vector<int>(runs[peak].second, 1)),
      BraidWord(n, std::move(right)),
      n, m};
  return parts;
}

namespace {

long parse_long(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + tok + "'");
  }
  if (pos != tok.size())
    throw std::invalid_argument(std::string("bad ") + what + " '" + tok + "'");
  return v;
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

BraidWord parse_braid_word(const std::string& text) {
  std::string body = text;
  std::optional<int> strands_given;
  if (auto at = text.find('@'); at != std::string::npos) {
    body = text.substr(0, at);
    const std::string tail = trimmed(text.substr(at + 1));
    long n = parse_long(tail, "strand count");
    if (n < 1 || n > 1000000) throw std::invalid_argument("strand count out of range");
    strands_given = static_cast<int>(n);
  }

  std::vector<int> letters;
  int maxidx = 0;
  const std::string core = trimmed(body);
  if (!core.empty() && core.back() == ',') throw std::invalid_argument("trailing comma");
  std::istringstream is(core);
  std::string token;
  bool any = !core.empty();
  while (any && std::getline(is, token, ',')) {
    token = trimmed(token);
    if (token.empty()) throw std::invalid_argument("empty letter token");
    long idx = 0, exp = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      idx = parse_long(trimmed(token.substr(0, caret)), "generator index");
      exp = parse_long(trimmed(token.substr(caret + 1)), "exponent");
    } else {
      idx = parse_long(token, "generator index");
    }
    if (idx < 1) throw std::invalid_argument("generator index must be >= 1");
    if (exp < 0 || exp > 100000) throw std::invalid_argument("exponent out of range");
    maxidx = std::max(maxidx, static_cast<int>(idx));
    letters.insert(letters.end(), static_cast<std::size_t>(exp), static_cast<int>(idx));
  }

  const int strands = strands_given.value_or(maxidx + 1);
  return BraidWord(strands, std::move(letters));  // range-checks letters
}

std::string word_csv(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ",";
    os << w.letters[i];
  }
  return os.str();
}

std::string word_text(const BraidWord& w) {
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    if (!first) os << ",";
    first = false;
    os << w.letters[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << "@" << w.strands;
  return os.str();
}

}  // namespace rulings
