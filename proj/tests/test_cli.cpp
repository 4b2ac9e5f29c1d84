#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "rulings/emit.hpp"
#include "rulings/scanner.hpp"

using namespace rulings;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

fs::path test_dir() {
  const fs::path dir = fs::temp_directory_path() / "rulings-cli-tests";
  fs::create_directories(dir);
  return dir;
}

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const fs::path so = test_dir() / ("out" + std::to_string(counter) + ".txt");
  const fs::path se = test_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = env_prefix + RULINGS_CLI_BIN " " + args + " > " +
                          so.string() + " 2> " + se.string();
  const int status = std::system(cmd.c_str());
  CmdResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(so);
  r.err = slurp(se);
  return r;
}

const std::string kStaircaseArg = "'1^2,2^2,3^2,4^2,3^2,2,1@5'";

}  // namespace

TEST_CASE("ruling subcommand") {
  const CmdResult human = run_cli("ruling " + kStaircaseArg);
  CHECK(human.code == 0);
  CHECK(human.out.find("sequence: (4, 20, 33, 24, 8, 1)") != std::string::npos);
  CHECK(human.out.find("tb: 7") != std::string::npos);
  CHECK(human.out.find("components: 3") != std::string::npos);
  CHECK(human.out.find("single-peak factors: (1, 1) * (1, 3, 1) * (2, 1)^2") !=
        std::string::npos);

  const CmdResult js = run_cli("ruling " + kStaircaseArg + " --json");
  CHECK(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("word") == "1,1,2,2,3,3,4,4,3,3,2,1");
  CHECK(j.at("strands") == 5);
  CHECK(j.at("ell") == 3);
  CHECK(j.at("tb") == 7);
  CHECK(j.at("mu") == 8);
  CHECK(j.at("rtilde") == json::array({4, 20, 33, 24, 8, 1}));
  CHECK(j.at("log_concave") == true);
  CHECK(j.at("no_internal_zeros") == true);
  CHECK(j.at("unimodal") == true);
  CHECK(j.at("first_violation").is_null());

  const CmdResult csv = run_cli("ruling " + kStaircaseArg + " --csv");
  CHECK(csv.code == 0);
  CHECK(csv.out ==
        record_csv_header() +
            "\n\"1,1,2,2,3,3,4,4,3,3,2,1\",5,3,7,8,\"4,20,33,24,8,1\",1,1,1,\n");

  CHECK(run_cli("ruling '2@2'").code == 2);         // letter out of range
  CHECK(run_cli("ruling '1,x'").code == 2);         // parse failure
  CHECK(run_cli("ruling '1@9'").code == 2);         // DP resource bound
  CHECK(run_cli("ruling 1 --json --csv").code == 2);
}

TEST_CASE("json emission round-trips through the cache parser") {
  const CmdResult js = run_cli("ruling " + kStaircaseArg + " --json");
  REQUIRE(js.code == 0);
  const ScanRecord direct =
      make_record(BraidWord(5, {1, 1, 2, 2, 3, 3, 4, 4, 3, 3, 2, 1}));
  CHECK(parse_cache_line(json_to_cache_line(json::parse(js.out))) == direct);
  CHECK(json::parse(js.out) == record_to_json(direct));
}

TEST_CASE("torus subcommand") {
  const CmdResult js = run_cli("torus 3 4 --json");
  CHECK(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("n") == 3);
  CHECK(j.at("m") == 4);
  CHECK(j.at("delta") == 3);
  CHECK(j.at("rtilde") == json::array({5, 10, 6, 1}));
  CHECK(j.at("cross_check") == "ok");

  const CmdResult human = run_cli("torus 2 3");
  CHECK(human.code == 0);
  CHECK(human.out.find("(2, 1)") != std::string::npos);
  CHECK(human.out.find("cross-check: ok") != std::string::npos);

  const CmdResult skipped = run_cli("torus 9 10 --json");
  CHECK(skipped.code == 0);
  CHECK(json::parse(skipped.out).at("cross_check") == "skipped");

  const CmdResult bad = run_cli("torus 4 6");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(run_cli("torus 0 1").code == 2);
  CHECK(run_cli("torus 3").code == 2);
}

TEST_CASE("ade subcommand") {
  const CmdResult human = run_cli("ade D5");
  CHECK(human.code == 0);
  CHECK(human.out.find("bps: (2, 6, 5, 1)") != std::string::npos);
  CHECK(human.out.find("braid: 1^3,2,1^2,2@3") != std::string::npos);
  CHECK(human.out.find("graph check (independence polynomial reversed): ok") !=
        std::string::npos);
  CHECK(human.out.find("braid check (ruling DP): ok") != std::string::npos);

  const CmdResult js = run_cli("ade E8 --json");
  CHECK(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("label") == "E8");
  CHECK(j.at("bps") == json::array({7, 21, 21, 8, 1}));

  CHECK(run_cli("ade F4").code == 2);
  CHECK(run_cli("ade D3").code == 2);
}

TEST_CASE("check subcommand always exits zero on valid input") {
  const CmdResult r = run_cli("check 1,0,1");
  CHECK(r.code == 0);
  CHECK(r.out.find("no-internal-zeros: no") != std::string::npos);
  CHECK(r.out.find("first violation: log-concavity at index 1") != std::string::npos);

  const CmdResult js = run_cli("check 1,0,1 --json");
  CHECK(js.code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("sequence") == json::array({1, 0, 1}));
  CHECK(j.at("log_concave") == false);
  CHECK(j.at("no_internal_zeros") == false);
  CHECK(j.at("unimodal") == false);
  CHECK(j.at("first_violation").at("kind") == "log-concavity");
  CHECK(j.at("first_violation").at("index") == 1);

  const CmdResult ok = run_cli("check 7,21,21,8,1 --json");
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out).at("log_concave") == true);

  CHECK(run_cli("check 1,-2,1").code == 2);  // negative entry
  CHECK(run_cli("check '1,,2'").code == 2);  // malformed csv
}

TEST_CASE("indep subcommand") {
  const fs::path edges = test_dir() / "d4.edges";
  {
    std::ofstream os(edges);
    os << "# D4 star\n1 2\n2 3\n\n2 4\n";
  }
  const CmdResult r = run_cli("indep " + edges.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("independence polynomial: (1, 4, 3, 1)") != std::string::npos);

  const fs::path tri = test_dir() / "tri.edges";
  {
    std::ofstream os(tri);
    os << "1 2\n2 3\n1 3\n";
  }
  CHECK(run_cli("indep " + tri.string()).code == 2);  // cycle

  const fs::path bad = test_dir() / "bad.edges";
  {
    std::ofstream os(bad);
    os << "1 2 3\n";
  }
  CHECK(run_cli("indep " + bad.string()).code == 2);
  CHECK(run_cli("indep " + (test_dir() / "missing.edges").string()).code == 2);
}

TEST_CASE("regress subcommand") {
  const CmdResult r = run_cli("regress");
  CHECK(r.code == 0);
  CHECK(r.out.find("ok   gl3-genus2-two-punctures") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const CmdResult js = run_cli("regress --json");
  CHECK(js.code == 0);
  const json j = json::parse(js.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 9);
  for (const auto& item : j) {
    CHECK(item.at("pass") == true);
  }
}

TEST_CASE("scan subcommand is deterministic and summarizes on stderr") {
  const CmdResult one =
      run_cli("scan --max-strands 3 --max-length 5 --workers 1 --json");
  const CmdResult two =
      run_cli("scan --max-strands 3 --max-length 5 --workers 2 --json");
  CHECK(one.code == 0);
  CHECK(two.code == 0);
  CHECK(one.out == two.out);
  CHECK(one.err.find("violations: 0") != std::string::npos);

  std::istringstream lines(one.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    CHECK(j.at("log_concave") == true);
    ++n;
  }
  CHECK(n > 10);

  // worker count from the environment, invalid values fall back to 1
  const CmdResult env =
      run_cli("scan --max-strands 2 --max-length 3 --json", "RULINGS_WORKERS=2 ");
  CHECK(env.code == 0);
  const CmdResult bad_env =
      run_cli("scan --max-strands 2 --max-length 3 --json", "RULINGS_WORKERS=abc ");
  CHECK(bad_env.code == 0);
  CHECK(bad_env.err.find("RULINGS_WORKERS") != std::string::npos);
  CHECK(bad_env.out == env.out);

  CHECK(run_cli("scan --max-strands 9").code == 2);
  CHECK(run_cli("scan --max-strands 1").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("ruling").code == 2);
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("ruling --help").code == 0);
  CHECK(run_cli("scan --help").code == 0);
}
