#pragma once

#include <string>

#include <json.hpp>

#include "rulings/scanner.hpp"

namespace rulings {

// JSON object with keys word, strands, ell, tb, mu, rtilde, log_concave,
// no_internal_zeros, unimodal, first_violation. rtilde entries are JSON
// numbers when they fit in 64 bits, decimal strings otherwise.
nlohmann::json record_to_json(const ScanRecord& rec);

// Rebuilds the cache-format line from a record's JSON emission (the
// round-trip bridge between --json output and cache_load).
std::string json_to_cache_line(const nlohmann::json& j);

std::string record_csv_header();
std::string record_to_csv(const ScanRecord& rec);

}  // namespace rulings
