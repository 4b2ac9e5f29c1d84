#include "rulings/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "rulings/closedforms.hpp"
#include "rulings/errors.hpp"
#include "rulings/ruling.hpp"

namespace rulings {

ScanRecord make_record(const BraidWord& w) {
  const ClassicalInvariants ci = classical_invariants(w);
  ScanRecord rec;
  rec.word = w;
  rec.ell = ci.ell;
  rec.tb = ci.tb;
  rec.mu = ci.mu;
  rec.rtilde = normalized_ruling_poly(w);
  rec.report = conjecture_report(rec.rtilde);
  return rec;
}

bool verify_multiplicativity(const BraidWord& b1, const BraidWord& g, const BraidWord& b2) {
  if (b1.strands != b2.strands)
    throw StrandMismatch("flanks live on " + std::to_string(b1.strands) + " and " +
                         std::to_string(b2.strands) + " strands");
  const int n = b1.strands;
  const BraidWord gs = shift_embed(g, n);

  std::vector<int> spliced = b1.letters;
  spliced.insert(spliced.end(), gs.letters.begin(), gs.letters.end());
  spliced.insert(spliced.end(), b2.letters.begin(), b2.letters.end());
  const BraidWord whole(gs.strands, std::move(spliced));

  std::vector<int> flank = b1.letters;
  flank.insert(flank.end(), b2.letters.begin(), b2.letters.end());
  const BraidWord flanks(n, std::move(flank));

  const ZLaurent lhs = ruling_poly(whole);
  const ZLaurent rhs = ZLaurent::monomial(1, 1) * ruling_poly(g) * ruling_poly(flanks);
  if (!(lhs == rhs)) return false;
  return normalized_ruling_poly(whole) ==
         convolve(normalized_ruling_poly(g), normalized_ruling_poly(flanks));
}

namespace {

// R~ of the closure of sigma_1^e (split strands do not change it).
BpsSequence a_tower(int e) {
  if (e <= 1) return BpsSequence(std::vector<mpz_class>{1});
  return ade_bps({AdeFamily::A, e - 1});
}

}  // namespace

std::optional<std::vector<BpsSequence>> singlepeak_factors(const BraidWord& w) {
  std::vector<BpsSequence> factors;
  BraidWord cur = w;
  while (!cur.letters.empty()) {
    auto parts = single_peak_decompose(cur);
    if (!parts) return std::nullopt;
    factors.push_back(a_tower(parts->gamma.length()));
    std::vector<int> rest = parts->beta1.letters;
    rest.insert(rest.end(), parts->beta2.letters.begin(), parts->beta2.letters.end());
    cur = BraidWord(parts->n, std::move(rest));
  }
  return factors;
}

BpsSequence singlepeak_eval(const BraidWord& w) {
  const auto factors = singlepeak_factors(w);
  if (!factors) throw NotSinglePeak("word " + word_text(w) + " is not single-peak");
  BpsSequence acc(std::vector<mpz_class>{1});
  for (const BpsSequence& f : *factors) acc = convolve(acc, f);
  return acc;
}

namespace {

bool is_canonical(const std::vector<int>& ls) {
  const std::size_t L = ls.size();
  std::vector<int> rot = ls;
  for (std::size_t r = 1; r < L; ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < ls) return false;
  }
  return true;
}

std::vector<BraidWord> enumerate_canonical(int max_strands, int max_length) {
  std::vector<BraidWord> words;
  for (int s = 2; s <= max_strands; ++s) {
    for (int L = 1; L <= max_length; ++L) {
      std::vector<int> ls(static_cast<std::size_t>(L), 1);
      for (;;) {
        if (is_canonical(ls)) words.emplace_back(s, ls);
        // odometer over {1..s-1}^L in lexicographic order
        int i = L - 1;
        while (i >= 0 && ls[i] == s - 1) ls[i--] = 1;
        if (i < 0) break;
        ++ls[i];
      }
    }
  }
  return words;
}

std::string cache_key(int strands, const std::string& wordcsv) {
  return std::to_string(strands) + "|" + wordcsv;
}

}  // namespace

ScanStats scan(const ScanConfig& cfg, const std::function<void(const ScanRecord&)>& sink) {
  if (cfg.max_strands > 8)
    throw ResourceExceeded("scan supports at most 8 strands, got " +
                           std::to_string(cfg.max_strands));
  if (cfg.max_strands < 2 || cfg.max_length < 1 || cfg.workers < 1)
    throw std::invalid_argument("scan: need max_strands >= 2, max_length >= 1, workers >= 1");

  std::map<std::string, ScanRecord> cached;
  if (cfg.cache_path) {
    if (cfg.resume) {
      for (ScanRecord& rec : cache_load(*cfg.cache_path))
        cached.insert_or_assign(cache_key(rec.word.strands, word_csv(rec.word)), std::move(rec));
    } else {
      std::ofstream fresh(*cfg.cache_path, std::ios::trunc);
      if (!fresh) throw CacheCorrupt("cannot open cache file " + *cfg.cache_path);
    }
  }

  const std::vector<BraidWord> words = enumerate_canonical(cfg.max_strands, cfg.max_length);
  constexpr std::size_t kChunk = 64;
  const std::size_t num_chunks = (words.size() + kChunk - 1) / kChunk;

  // (record, came-from-cache) per word, one slot per chunk
  using Chunk = std::vector<std::pair<ScanRecord, bool>>;
  std::vector<std::optional<Chunk>> done(num_chunks);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::exception_ptr worker_err;

  auto work = [&]() {
    try {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= num_chunks) return;
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(lo + kChunk, words.size());
        Chunk chunk;
        chunk.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) {
          const BraidWord& w = words[i];
          const auto it = cached.find(cache_key(w.strands, word_csv(w)));
          if (it != cached.end())
            chunk.emplace_back(it->second, true);
          else
            chunk.emplace_back(make_record(w), false);
        }
        std::lock_guard<std::mutex> lock(mu);
        done[c] = std::move(chunk);
        cv.notify_all();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!worker_err) worker_err = std::current_exception();
      next.store(num_chunks);
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  const std::size_t nw =
      std::min(static_cast<std::size_t>(cfg.workers), std::max<std::size_t>(num_chunks, 1));
  pool.reserve(nw);
  for (std::size_t t = 0; t < nw; ++t) pool.emplace_back(work);

  ScanStats stats;
  std::exception_ptr sink_err;
  std::ofstream cache_out;
  if (cfg.cache_path) {
    cache_out.open(*cfg.cache_path, std::ios::app);
    if (!cache_out) {
      next.store(num_chunks);
      for (auto& t : pool) t.join();
      throw CacheCorrupt("cannot open cache file " + *cfg.cache_path);
    }
  }

  for (std::size_t c = 0; c < num_chunks && !sink_err; ++c) {
    Chunk chunk;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return done[c].has_value() || worker_err; });
      if (worker_err) break;
      chunk = std::move(*done[c]);
      done[c].reset();
    }
    for (auto& [rec, from_cache] : chunk) {
      try {
        ++stats.records;
        if (from_cache)
          ++stats.from_cache;
        else
          ++stats.computed;
        if (!rec.report.all_pass()) {
          ++stats.violations;
          std::cerr << "CONJECTURE VIOLATION: word " << word_text(rec.word) << " rtilde "
                    << csv_str(rec.rtilde) << "\n";
        }
        if (cfg.cache_path && !from_cache) {
          cache_out << cache_line(rec) << "\n";
          cache_out.flush();
        }
        sink(rec);
      } catch (...) {
        sink_err = std::current_exception();
        next.store(num_chunks);
        break;
      }
    }
  }

  for (auto& t : pool) t.join();
  if (worker_err && !sink_err) std::rethrow_exception(worker_err);
  if (sink_err) std::rethrow_exception(sink_err);
  return stats;
}

int scan_exit_code(const ScanStats& stats) { return stats.violations > 0 ? 3 : 0; }

std::string cache_line(const ScanRecord& rec) {
  std::ostringstream os;
  os << word_csv(rec.word) << "\t" << rec.word.strands << "\t" << rec.ell << "\t" << rec.tb
     << "\t" << csv_str(rec.rtilde) << "\t" << (rec.report.log_concave ? 1 : 0) << "\t"
     << (rec.report.no_internal_zeros ? 1 : 0) << "\t" << (rec.report.unimodal ? 1 : 0);
  return os.str();
}

namespace {

long parse_cache_long(const std::string& tok) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw CacheCorrupt("bad numeric field '" + tok + "'");
  }
  if (pos != tok.size() || tok.empty()) throw CacheCorrupt("bad numeric field '" + tok + "'");
  return v;
}

bool parse_cache_bool(const std::string& tok) {
  if (tok == "1") return true;
  if (tok == "0") return false;
  throw CacheCorrupt("bad boolean field '" + tok + "'");
}

}  // namespace

ScanRecord parse_cache_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  if (fields.size() != 8)
    throw CacheCorrupt("expected 8 tab-separated fields, got " + std::to_string(fields.size()));

  const long strands = parse_cache_long(fields[1]);
  if (strands < 1 || strands > 127) throw CacheCorrupt("strand count out of range");

  std::vector<int> letters;
  if (!fields[0].empty()) {
    std::istringstream is(fields[0]);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      const long k = parse_cache_long(tok);
      if (k < 1 || k >= strands) throw CacheCorrupt("letter out of range");
      letters.push_back(static_cast<int>(k));
    }
  }

  ScanRecord rec;
  try {
    rec.word = BraidWord(static_cast<int>(strands), std::move(letters));
    rec.rtilde = BpsSequence(parse_mpz_csv(fields[4]));
  } catch (const std::invalid_argument& e) {
    throw CacheCorrupt(e.what());
  }
  for (const mpz_class& c : rec.rtilde.coeffs)
    if (c < 0) throw CacheCorrupt("negative rtilde coefficient");
  rec.ell = static_cast<int>(parse_cache_long(fields[2]));
  rec.tb = parse_cache_long(fields[3]);
  rec.mu = rec.tb + 1;
  rec.report = conjecture_report(rec.rtilde);

  const ClassicalInvariants ci = classical_invariants(rec.word);
  if (ci.tb != rec.tb || ci.ell != rec.ell)
    throw CacheCorrupt("stored invariants disagree with the word");
  if (parse_cache_bool(fields[5]) != rec.report.log_concave ||
      parse_cache_bool(fields[6]) != rec.report.no_internal_zeros ||
      parse_cache_bool(fields[7]) != rec.report.unimodal)
    throw CacheCorrupt("stored predicates disagree with the stored sequence");
  return rec;
}

void cache_append(const std::string& path, const ScanRecord& rec) {
  std::ofstream os(path, std::ios::app);
  if (!os) throw CacheCorrupt("cannot open cache file " + path);
  os << cache_line(rec) << "\n";
}

std::vector<ScanRecord> cache_load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return {};
  std::ostringstream buf;
  buf << is.rdbuf();
  std::string all = buf.str();

  std::vector<ScanRecord> out;
  std::size_t start = 0;
  while (start < all.size()) {
    const std::size_t nl = all.find('\n', start);
    if (nl == std::string::npos) {
      std::cerr << "warning: discarding incomplete trailing cache line in " << path << "\n";
      break;
    }
    std::string line = all.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(parse_cache_line(line));
    start = nl + 1;
  }
  return out;
}

}  // namespace rulings
