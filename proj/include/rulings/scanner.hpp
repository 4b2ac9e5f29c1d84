#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rulings/bps.hpp"
#include "rulings/braid.hpp"
#include "rulings/concavity.hpp"

namespace rulings {

struct ScanConfig {
  int max_strands = 4;   // 2..8 (the DP refuses more)
  int max_length = 8;    // >= 1
  int workers = 1;       // >= 1
  std::optional<std::string> cache_path;
  bool resume = false;
};

// One verified word: the canonical rotation, its classical invariants, the
// normalized ruling polynomial, and the conjecture predicates.
struct ScanRecord {
  BraidWord word;
  int ell = 1;
  long tb = 0;
  long mu = 0;
  BpsSequence rtilde;
  ConjectureReport report;

  bool operator==(const ScanRecord&) const = default;
};

struct ScanStats {
  std::size_t records = 0;
  std::size_t computed = 0;
  std::size_t from_cache = 0;
  std::size_t violations = 0;
};

// Builds the record for one word (no canonicalization applied; scan feeds it
// canonical words, the CLI feeds it words as typed).
ScanRecord make_record(const BraidWord& w);

/**
 * Multiplicativity check: with gamma~ = shift_embed(g, n) spliced between the
 * flanks, tests R_{(b1 gamma~ b2)^>} = z * R_{g^>} * R_{(b1 b2)^>} and the
 * normalized form R~_{(b1 gamma~ b2)^>} = R~_{g^>} * R~_{(b1 b2)^>}, both by
 * direct DP. b1 and b2 must share a strand count (StrandMismatch).
 */
bool verify_multiplicativity(const BraidWord& b1, const BraidWord& g,
                             const BraidWord& b2);

/**
 * Fast evaluation of R~ for single-peak words: peels the peak tower as one
 * type-A factor and recurses on the flanks, never running the DP. Throws
 * NotSinglePeak when the grouped index pattern fails.
 */
BpsSequence singlepeak_eval(const BraidWord& w);

// The type-A factors collected during the peel, in peel order; nullopt when
// the word is not single-peak. convolving them (times (1)) gives
// singlepeak_eval.
std::optional<std::vector<BpsSequence>> singlepeak_factors(const BraidWord& w);

/**
 * Conjecture scan: enumerates canonical words by (strands, length,
 * lexicographic order), computes each record on a worker pool, and emits
 * records to the sink in enumeration order regardless of worker count.
 * With a cache path, records are appended as produced; with resume, records
 * already in the cache are emitted from it instead of recomputed.
 * Violations are counted and reported loudly on stderr, never asserted
 * impossible. Throws ResourceExceeded (strands > 8), CacheCorrupt.
 */
ScanStats scan(const ScanConfig& cfg,
               const std::function<void(const ScanRecord&)>& sink);

// Process exit code a scan result should map to (0 or 3).
int scan_exit_code(const ScanStats& stats);

// --- append-only cache ---
// Tab-separated line: word, strands, ell, tb, rtilde, log_concave,
// no_internal_zeros, unimodal; word and rtilde comma-joined, booleans 1/0.
std::string cache_line(const ScanRecord& rec);
// Throws CacheCorrupt on malformed or inconsistent lines.
ScanRecord parse_cache_line(const std::string& line);

void cache_append(const std::string& path, const ScanRecord& rec);

// Loads every complete record; a trailing line without '\n' is discarded
// with a warning on stderr (crash recovery).
std::vector<ScanRecord> cache_load(const std::string& path);

}  // namespace rulings
