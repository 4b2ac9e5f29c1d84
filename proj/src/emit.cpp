#include "rulings/emit.hpp"

#include <sstream>

#include "rulings/concavity.hpp"

namespace rulings {

nlohmann::json record_to_json(const ScanRecord& rec) {
  nlohmann::json j;
  j["word"] = word_csv(rec.word);
  j["strands"] = rec.word.strands;
  j["ell"] = rec.ell;
  j["tb"] = rec.tb;
  j["mu"] = rec.mu;
  nlohmann::json seq = nlohmann::json::array();
  for (const mpz_class& v : rec.rtilde.coeffs) {
    if (v.fits_slong_p())
      seq.push_back(v.get_si());
    else
      seq.push_back(v.get_str());
  }
  j["rtilde"] = std::move(seq);
  j["log_concave"] = rec.report.log_concave;
  j["no_internal_zeros"] = rec.report.no_internal_zeros;
  j["unimodal"] = rec.report.unimodal;
  if (rec.report.first_violation) {
    j["first_violation"] = {
        {"kind", violation_kind_str(rec.report.first_violation->first)},
        {"index", rec.report.first_violation->second},
    };
  } else {
    j["first_violation"] = nullptr;
  }
  return j;
}

std::string json_to_cache_line(const nlohmann::json& j) {
  std::ostringstream os;
  os << j.at("word").get<std::string>() << "\t" << j.at("strands").get<long>() << "\t"
     << j.at("ell").get<long>() << "\t" << j.at("tb").get<long>() << "\t";
  const auto& seq = j.at("rtilde");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) os << ",";
    if (seq[i].is_string())
      os << seq[i].get<std::string>();
    else
      os << seq[i].dump();
  }
  os << "\t" << (j.at("log_concave").get<bool>() ? 1 : 0) << "\t"
     << (j.at("no_internal_zeros").get<bool>() ? 1 : 0) << "\t"
     << (j.at("unimodal").get<bool>() ? 1 : 0);
  return os.str();
}

std::string record_csv_header() {
  return "word,strands,ell,tb,mu,rtilde,log_concave,no_internal_zeros,unimodal,first_violation";
}

std::string record_to_csv(const ScanRecord& rec) {
  std::ostringstream os;
  os << "\"" << word_csv(rec.word) << "\"," << rec.word.strands << "," << rec.ell << ","
     << rec.tb << "," << rec.mu << ",\"" << csv_str(rec.rtilde) << "\","
     << (rec.report.log_concave ? 1 : 0) << "," << (rec.report.no_internal_zeros ? 1 : 0) << ","
     << (rec.report.unimodal ? 1 : 0) << ",";
  if (rec.report.first_violation)
    os << violation_kind_str(rec.report.first_violation->first) << ":"
       << rec.report.first_violation->second;
  return os.str();
}

}  // namespace rulings
