#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "rulings/closedforms.hpp"
#include "rulings/concavity.hpp"
#include "rulings/emit.hpp"
#include "rulings/errors.hpp"
#include "rulings/regress.hpp"
#include "rulings/ruling.hpp"
#include "rulings/scanner.hpp"
#include "rulings/transforms.hpp"

namespace {

using namespace rulings;

enum class Mode { Human, Json, Csv };

struct OutputFlags {
  bool json = false;
  bool csv = false;
  Mode mode() const { return json ? Mode::Json : csv ? Mode::Csv : Mode::Human; }
};

void add_output_flags(CLI::App* sub, OutputFlags& flags) {
  auto* j = sub->add_flag("--json", flags.json, "emit JSON");
  sub->add_flag("--csv", flags.csv, "emit CSV")->excludes(j);
}

int default_workers() {
  const char* env = std::getenv("RULINGS_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 1024) {
    std::cerr << "warning: ignoring bad RULINGS_WORKERS value '" << env << "'\n";
    return 1;
  }
  return static_cast<int>(v);
}

std::string grouped_factors_str(const std::vector<BpsSequence>& factors) {
  std::vector<BpsSequence> sorted = factors;
  std::sort(sorted.begin(), sorted.end(),
            [](const BpsSequence& x, const BpsSequence& y) { return x.coeffs < y.coeffs; });
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (!first) os << " * ";
    first = false;
    os << tuple_str(sorted[i]);
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

int run_ruling(const std::string& word_text_arg, const OutputFlags& flags) {
  const BraidWord w = parse_braid_word(word_text_arg);
  const ScanRecord rec = make_record(w);
  const auto factors = singlepeak_factors(w);

  switch (flags.mode()) {
    case Mode::Json: {
      std::cout << record_to_json(rec).dump() << "\n";
      return 0;
    }
    case Mode::Csv: {
      std::cout << record_csv_header() << "\n" << record_to_csv(rec) << "\n";
      return 0;
    }
    case Mode::Human: break;
  }

  const ClassicalInvariants ci = classical_invariants(w);
  std::cout << "word: " << word_text(w) << "\n";
  std::cout << "strands: " << w.strands << "  crossings: " << ci.e << "  tb: " << ci.tb
            << "  mu: " << ci.mu << "  components: " << ci.ell << "  delta: ";
  if (ci.delta)
    std::cout << *ci.delta;
  else
    std::cout << "-";
  std::cout << "\n";
  std::cout << "R(z): " << ruling_poly(w).str() << "\n";
  std::cout << "R~(z): " << zsq_poly_str(rec.rtilde) << "\n";
  std::cout << "sequence: " << tuple_str(rec.rtilde) << "\n";
  std::cout << "log-concave: " << (rec.report.log_concave ? "yes" : "no")
            << "  no-internal-zeros: " << (rec.report.no_internal_zeros ? "yes" : "no")
            << "  unimodal: " << (rec.report.unimodal ? "yes" : "no") << "\n";
  if (rec.report.first_violation)
    std::cout << "first violation: " << violation_kind_str(rec.report.first_violation->first)
              << " at index " << rec.report.first_violation->second << "\n";
  if (factors)
    std::cout << "single-peak factors: " << grouped_factors_str(*factors) << "\n";
  else
    std::cout << "single-peak factors: (word is not single-peak)\n";
  return 0;
}

int run_torus(int n, int m, const OutputFlags& flags) {
  const BpsSequence seq = torus_rtilde(n, m);
  const int a = std::min(n, m), b = std::max(n, m);
  const bool checkable = a <= 8 && seq.delta() <= 60;
  if (checkable) {
    const BpsSequence dp = bps_from_braid(torus_braid(a, b));
    if (!(dp == seq))
      throw InvariantViolation("torus closed form disagrees with the ruling DP for (" +
                               std::to_string(n) + ", " + std::to_string(m) + ")");
  }
  const std::string check = checkable ? "ok" : "skipped";

  switch (flags.mode()) {
    case Mode::Json: {
      nlohmann::json j;
      j["n"] = n;
      j["m"] = m;
      j["delta"] = seq.delta();
      nlohmann::json arr = nlohmann::json::array();
      for (const mpz_class& v : seq.coeffs)
        v.fits_slong_p() ? arr.push_back(v.get_si()) : arr.push_back(v.get_str());
      j["rtilde"] = std::move(arr);
      j["cross_check"] = check;
      std::cout << j.dump() << "\n";
      return 0;
    }
    case Mode::Csv:
      std::cout << "n,m,delta,rtilde,cross_check\n"
                << n << "," << m << "," << seq.delta() << ",\"" << csv_str(seq) << "\","
                << check << "\n";
      return 0;
    case Mode::Human:
      std::cout << "torus knot (" << n << ", " << m << ")\n";
      std::cout << "delta: " << seq.delta() << "\n";
      std::cout << "bps: " << tuple_str(seq) << "\n";
      std::cout << "R~(z): " << zsq_poly_str(seq) << "\n";
      std::cout << "ruling DP cross-check: " << check << "\n";
      return 0;
  }
  return 0;
}

int run_ade(const std::string& label_text, const OutputFlags& flags) {
  const AdeLabel label = parse_ade_label(label_text);
  const BpsSequence seq = ade_bps(label);

  // m_k of the diagram must be n_{delta-k}
  const std::vector<mpz_class> mk = independence_poly(ade_graph(label));
  std::vector<mpz_class> reversed(seq.coeffs.rbegin(), seq.coeffs.rend());
  const bool graph_ok = mk == reversed;

  const bool braid_ok = bps_from_braid(ade_braid(label)) == seq;

  switch (flags.mode()) {
    case Mode::Json: {
      nlohmann::json j;
      j["label"] = ade_label_str(label);
      j["delta"] = seq.delta();
      nlohmann::json arr = nlohmann::json::array();
      for (const mpz_class& v : seq.coeffs)
        v.fits_slong_p() ? arr.push_back(v.get_si()) : arr.push_back(v.get_str());
      j["bps"] = std::move(arr);
      j["graph_check"] = graph_ok ? "ok" : "FAIL";
      j["braid_check"] = braid_ok ? "ok" : "FAIL";
      std::cout << j.dump() << "\n";
      break;
    }
    case Mode::Csv:
      std::cout << "label,delta,bps,graph_check,braid_check\n"
                << ade_label_str(label) << "," << seq.delta() << ",\"" << csv_str(seq) << "\","
                << (graph_ok ? "ok" : "FAIL") << "," << (braid_ok ? "ok" : "FAIL") << "\n";
      break;
    case Mode::Human:
      std::cout << "label: " << ade_label_str(label) << "\n";
      std::cout << "delta: " << seq.delta() << "\n";
      std::cout << "bps: " << tuple_str(seq) << "\n";
      std::cout << "braid: " << word_text(ade_braid(label)) << "\n";
      std::cout << "graph check (independence polynomial reversed): "
                << (graph_ok ? "ok" : "FAIL") << "\n";
      std::cout << "braid check (ruling DP): " << (braid_ok ? "ok" : "FAIL") << "\n";
      break;
  }
  if (!graph_ok || !braid_ok)
    throw InvariantViolation("closed form disagrees with its oracles for " +
                             ade_label_str(label));
  return 0;
}

int run_scan(const ScanConfig& cfg, const OutputFlags& flags) {
  const Mode mode = flags.mode();
  if (mode == Mode::Csv) std::cout << record_csv_header() << "\n";
  const ScanStats stats = scan(cfg, [mode](const ScanRecord& rec) {
    switch (mode) {
      case Mode::Json:
        std::cout << record_to_json(rec).dump() << "\n";
        break;
      case Mode::Csv:
        std::cout << record_to_csv(rec) << "\n";
        break;
      case Mode::Human: {
        std::cout << word_text(rec.word) << "  ell=" << rec.ell << " tb=" << rec.tb
                  << " mu=" << rec.mu << " rtilde=" << tuple_str(rec.rtilde);
        if (rec.report.all_pass())
          std::cout << "  ok";
        else
          std::cout << "  VIOLATION(" << violation_kind_str(rec.report.first_violation->first)
                    << "@" << rec.report.first_violation->second << ")";
        std::cout << "\n";
        break;
      }
    }
  });
  std::cerr << "scanned " << stats.records << " words (computed " << stats.computed
            << ", cached " << stats.from_cache << "), violations: " << stats.violations << "\n";
  return scan_exit_code(stats);
}

int run_check(const std::string& csv, const OutputFlags& flags) {
  const BpsSequence seq{parse_mpz_csv(csv)};
  const ConjectureReport rep = conjecture_report(seq);
  switch (flags.mode()) {
    case Mode::Json: {
      nlohmann::json j;
      nlohmann::json arr = nlohmann::json::array();
      for (const mpz_class& v : seq.coeffs)
        v.fits_slong_p() ? arr.push_back(v.get_si()) : arr.push_back(v.get_str());
      j["sequence"] = std::move(arr);
      j["log_concave"] = rep.log_concave;
      j["no_internal_zeros"] = rep.no_internal_zeros;
      j["unimodal"] = rep.unimodal;
      if (rep.first_violation)
        j["first_violation"] = {{"kind", violation_kind_str(rep.first_violation->first)},
                                {"index", rep.first_violation->second}};
      else
        j["first_violation"] = nullptr;
      std::cout << j.dump() << "\n";
      break;
    }
    case Mode::Csv:
      std::cout << "sequence,log_concave,no_internal_zeros,unimodal,first_violation\n"
                << "\"" << csv_str(seq) << "\"," << (rep.log_concave ? 1 : 0) << ","
                << (rep.no_internal_zeros ? 1 : 0) << "," << (rep.unimodal ? 1 : 0) << ",";
      if (rep.first_violation)
        std::cout << violation_kind_str(rep.first_violation->first) << ":"
                  << rep.first_violation->second;
      std::cout << "\n";
      break;
    case Mode::Human:
      std::cout << "sequence: " << tuple_str(seq) << "\n";
      std::cout << "log-concave: " << (rep.log_concave ? "yes" : "no") << "\n";
      std::cout << "no-internal-zeros: " << (rep.no_internal_zeros ? "yes" : "no") << "\n";
      std::cout << "unimodal: " << (rep.unimodal ? "yes" : "no") << "\n";
      if (rep.first_violation)
        std::cout << "first violation: " << violation_kind_str(rep.first_violation->first)
                  << " at index " << rep.first_violation->second << "\n";
      break;
  }
  return 0;
}

DynkinGraph read_graph_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open graph file " + path);
  std::vector<std::pair<int, int>> edges;
  int max_vertex = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u)) continue;  // blank
    if (!(ls >> v)) throw std::invalid_argument("graph line with a single endpoint: " + line);
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("trailing tokens on graph line: " + line);
    if (u < 1 || v < 1 || u > 1000000 || v > 1000000)
      throw std::invalid_argument("vertex out of range on line: " + line);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
  }
  return DynkinGraph(max_vertex, std::move(edges));
}

int run_indep(const std::string& path, const OutputFlags& flags) {
  const DynkinGraph g = read_graph_file(path);
  const std::vector<mpz_class> coeffs = independence_poly(g);
  switch (flags.mode()) {
    case Mode::Json: {
      nlohmann::json j;
      j["vertices"] = g.vertices;
      nlohmann::json arr = nlohmann::json::array();
      for (const mpz_class& v : coeffs)
        v.fits_slong_p() ? arr.push_back(v.get_si()) : arr.push_back(v.get_str());
      j["coeffs"] = std::move(arr);
      std::cout << j.dump() << "\n";
      break;
    }
    case Mode::Csv: {
      std::cout << "vertices,coeffs\n" << g.vertices << ",\"";
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        std::cout << (i ? "," : "") << coeffs[i].get_str();
      std::cout << "\"\n";
      break;
    }
    case Mode::Human: {
      std::cout << "vertices: " << g.vertices << "  edges: " << g.edges.size() << "\n";
      std::cout << "independence polynomial: (";
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        std::cout << (i ? ", " : "") << coeffs[i].get_str();
      std::cout << ")\n";
      break;
    }
  }
  return 0;
}

int run_regress(const OutputFlags& flags) {
  const auto results = regress();
  bool all = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [vec, pass] : results) {
    all = all && pass;
    switch (flags.mode()) {
      case Mode::Json: {
        nlohmann::json j;
        j["name"] = vec->name;
        j["source"] = vec->source;
        nlohmann::json seq = nlohmann::json::array();
        for (const mpz_class& v : vec->sequence.coeffs)
          v.fits_slong_p() ? seq.push_back(v.get_si()) : seq.push_back(v.get_str());
        j["sequence"] = std::move(seq);
        j["pass"] = pass;
        arr.push_back(std::move(j));
        break;
      }
      case Mode::Csv:
        break;  // emitted below
      case Mode::Human:
        std::cout << (pass ? "ok   " : "FAIL ") << vec->name << "  (" << vec->source << ")\n";
        break;
    }
  }
  if (flags.mode() == Mode::Json) std::cout << arr.dump() << "\n";
  if (flags.mode() == Mode::Csv) {
    std::cout << "name,pass,sequence\n";
    for (const auto& [vec, pass] : results)
      std::cout << vec->name << "," << (pass ? 1 : 0) << ",\"" << csv_str(vec->sequence)
                << "\"\n";
  }
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BPS invariants of plane curve singularities via normal rulings"};
  app.require_subcommand(1);

  std::string word_arg, label_arg, check_csv, graph_path;
  int torus_n = 2, torus_m = 3;
  ScanConfig cfg;
  cfg.workers = default_workers();
  std::string cache_path;
  OutputFlags fl_ruling, fl_torus, fl_ade, fl_scan, fl_check, fl_indep, fl_regress;

  auto* c_ruling = app.add_subcommand(
      "ruling", "ruling polynomial and BPS sequence of a positive braid word");
  c_ruling->add_option("word", word_arg, "braid word, e.g. '1^2,2^2,3^2,4^2,3^2,2,1@5'")
      ->required();
  add_output_flags(c_ruling, fl_ruling);

  auto* c_torus = app.add_subcommand("torus", "closed-form BPS sequence of a torus knot");
  c_torus->add_option("n", torus_n, "strand count")->required();
  c_torus->add_option("m", torus_m, "winding")->required();
  add_output_flags(c_torus, fl_torus);

  auto* c_ade = app.add_subcommand("ade", "BPS sequence of an ADE singularity");
  c_ade->add_option("label", label_arg, "A<n>, D<n>, or E<n>, e.g. D5")->required();
  add_output_flags(c_ade, fl_ade);

  auto* c_scan = app.add_subcommand("scan", "conjecture scan over canonical braid words");
  c_scan->add_option("--max-strands", cfg.max_strands, "largest strand count (default 4)");
  c_scan->add_option("--max-length", cfg.max_length, "largest word length (default 8)");
  c_scan->add_option("--workers", cfg.workers,
                     "worker threads (default RULINGS_WORKERS or 1)");
  c_scan->add_option("--cache", cache_path, "append-only cache file");
  c_scan->add_flag("--resume", cfg.resume, "reuse records already in the cache");
  add_output_flags(c_scan, fl_scan);

  auto* c_check = app.add_subcommand("check", "conjecture predicates of a plain sequence");
  c_check->add_option("sequence", check_csv, "comma-separated coefficients, e.g. 1,3,4,1")
      ->required();
  add_output_flags(c_check, fl_check);

  auto* c_indep = app.add_subcommand("indep", "independence polynomial of a forest");
  c_indep->add_option("file", graph_path, "edge list file: one 'u v' pair per line")
      ->required();
  add_output_flags(c_indep, fl_indep);

  auto* c_regress = app.add_subcommand("regress", "predicates over the stored sequences");
  add_output_flags(c_regress, fl_regress);

  int rc = 0;
  c_ruling->callback([&] { rc = run_ruling(word_arg, fl_ruling); });
  c_torus->callback([&] { rc = run_torus(torus_n, torus_m, fl_torus); });
  c_ade->callback([&] { rc = run_ade(label_arg, fl_ade); });
  c_scan->callback([&] {
    if (!cache_path.empty()) cfg.cache_path = cache_path;
    rc = run_scan(cfg, fl_scan);
  });
  c_check->callback([&] { rc = run_check(check_csv, fl_check); });
  c_indep->callback([&] { rc = run_indep(graph_path, fl_indep); });
  c_regress->callback([&] { rc = run_regress(fl_regress); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotCoprime& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotAForest& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CacheCorrupt& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NegativeEntry& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return rc;
}
