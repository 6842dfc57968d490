#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("gsurj_cli_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  REQUIRE(out.good());
  out << text;
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string(GSURJ_CLI_PATH) + " " + args + " >" + out.string() +
                          " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string curve_file() { return std::string(GSURJ_DATA_DIR) + "/genus3_example.json"; }

const std::vector<uint64_t> kS11At300 = {5, 47, 71, 79, 83, 101, 113, 137, 251, 269, 271};

}  // namespace

TEST_CASE("version flag") {
  const auto r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("missing subcommand or bad flags fail parse") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("check-tp " + curve_file()).exit_code == 1);          // --p missing
  CHECK(run_cli("certify " + curve_file() + " --p 7 --q 11 --bound 300 --format xml").exit_code ==
        1);
}

TEST_CASE("check-tp reports the node and component group order") {
  const auto r = run_cli("check-tp " + curve_file() + " --p 7 --deterministic");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["p"] == 7);
  CHECK(j["double_root"] == 0);
  CHECK(j["phi_order"] == 2);
  CHECK(j["curve"]["genus"] == 3);
  CHECK(j["curve"]["label"] == "genus3-example");
  CHECK(j["curve_id"].get<std::string>().size() == 16);
  CHECK(j["generated_at"] == "1970-01-01T00:00:00Z");
}

TEST_CASE("check-tp classifies failure and exits 2") {
  const auto r = run_cli("check-tp " + curve_file() + " --p 11");
  CHECK(r.exit_code == 2);
  const json j = json::parse(r.out);  // document still emitted for tooling
  CHECK(j["ok"] == false);
  CHECK(j["failure"] == "good_reduction");
  CHECK(!r.err.empty());
}

TEST_CASE("bad curve inputs exit 1") {
  const fs::path dir = scratch_dir();
  spit(dir / "singular.json", R"({"coeffs": ["0", "0", "0", "1"], "genus": 1})");
  spit(dir / "broken.json", "{nope");
  CHECK(run_cli("check-tp " + (dir / "singular.json").string() + " --p 7").exit_code == 1);
  CHECK(run_cli("check-tp " + (dir / "broken.json").string() + " --p 7").exit_code == 1);
  CHECK(run_cli("check-tp " + (dir / "absent.json").string() + " --p 7").exit_code == 1);
  CHECK(run_cli("check-tp " + curve_file() + " --p 4").exit_code == 1);
}

TEST_CASE("charpoly emits counts and coefficients") {
  const auto r = run_cli("charpoly " + curve_file() + " --q 11 --deterministic");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["q"] == 11);
  CHECK(j["counts"] == json::array({"11", "135", "1247"}));
  CHECK(j["charpoly"] == json::array({"1331", "-121", "77", "-35", "7", "-1", "1"}));
  CHECK(j["trace_coeff"] == "-1");
}

TEST_CASE("charpoly rejects bad q") {
  CHECK(run_cli("charpoly " + curve_file() + " --q 2").exit_code == 1);
  CHECK(run_cli("charpoly " + curve_file() + " --q 7").exit_code == 2);  // bad reduction
}

TEST_CASE("certify produces the certificate document") {
  const auto r =
      run_cli("certify " + curve_file() + " --p 7 --q 11 --bound 300 --deterministic");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["p"] == 7);
  CHECK(j["phi_order"] == 2);
  CHECK(j["q"] == 11);
  CHECK(j["trace_coeff"] == "-1");
  CHECK(j["bound"] == 300);
  CHECK(j["vacuous"] == false);
  CHECK(j["primes"] == json(kS11At300));
  CHECK(j["charpoly"][0] == "1331");

  // --output writes the identical bytes to a file
  const fs::path out_file = scratch_dir() / "cert.json";
  const auto r2 = run_cli("certify " + curve_file() +
                          " --p 7 --q 11 --bound 300 --deterministic --output " +
                          out_file.string());
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.empty());
  CHECK(slurp(out_file) == r.out);
}

TEST_CASE("certify enforces the reduction-type condition") {
  CHECK(run_cli("certify " + curve_file() + " --p 11 --q 13 --bound 300").exit_code == 2);
}

TEST_CASE("csv format lists one prime per line") {
  const auto r = run_cli("certify " + curve_file() + " --p 7 --q 11 --bound 300 --format csv");
  CHECK(r.exit_code == 0);
  std::string expect = "ell\n";
  for (uint64_t l : kS11At300) expect += std::to_string(l) + "\n";
  CHECK(r.out == expect);
}

TEST_CASE("vacuous certificate stays well-formed") {
  const auto r = run_cli("certify " + curve_file() + " --p 7 --q 5 --bound 300 --deterministic");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["vacuous"] == true);
  CHECK(j["trace_coeff"] == "0");
  CHECK(j["primes"].empty());
  CHECK(r.err.find("vacuous") != std::string::npos);
}

TEST_CASE("deterministic reruns are byte-identical") {
  const std::string args = "certify " + curve_file() + " --p 7 --q 13 --bound 500 --deterministic";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const std::string uargs = "union " + curve_file() +
                            " --p 7 --bound 120 --q-max 13 --deterministic --out-dir " +
                            (scratch_dir() / "udet").string();
  const auto ua = run_cli(uargs);
  const auto ub = run_cli(uargs);
  CHECK(ua.exit_code == 0);
  CHECK(ua.out == ub.out);
}

TEST_CASE("point-count cache: warm, hit, corrupt, recover") {
  const fs::path cache = scratch_dir() / "cache";
  const std::string args =
      "charpoly " + curve_file() + " --q 11 --deterministic --cache-dir " + cache.string();

  const auto cold = run_cli(args);
  CHECK(cold.exit_code == 0);
  CHECK(cold.err.find("count q=11") != std::string::npos);
  CHECK(cold.err.find("cache hit") == std::string::npos);

  std::vector<fs::path> entries;
  for (const auto& e : fs::directory_iterator(cache)) entries.push_back(e.path());
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].filename().string().find("_q11.json") != std::string::npos);

  const auto warm = run_cli(args);
  CHECK(warm.exit_code == 0);
  CHECK(warm.err.find("cache hit") != std::string::npos);
  CHECK(warm.err.find("count q=11") == std::string::npos);
  CHECK(warm.out == cold.out);

  // garbage entry is reported and recomputed
  spit(entries[0], "{ not json at all");
  const auto fixed = run_cli(args);
  CHECK(fixed.exit_code == 0);
  CHECK(fixed.err.find("warning: ignoring corrupted cache entry") != std::string::npos);
  CHECK(fixed.out == cold.out);
  const auto again = run_cli(args);  // rewritten entry is valid once more
  CHECK(again.err.find("cache hit") != std::string::npos);
  CHECK(again.out == cold.out);

  // an entry whose counts no longer match its charpoly is rejected, not trusted
  json tampered = json::parse(slurp(entries[0]));
  tampered["counts"][0] = "12";
  spit(entries[0], tampered.dump(2) + "\n");
  const auto retried = run_cli(args);
  CHECK(retried.exit_code == 0);
  CHECK(retried.err.find("warning: ignoring corrupted cache entry") != std::string::npos);
  CHECK(retried.out == cold.out);
}

TEST_CASE("union writes per-q certificates and an aggregate report") {
  const fs::path dir = scratch_dir() / "union_out";
  const auto r = run_cli("union " + curve_file() +
                         " --p 7 --bound 300 --q-max 13 --deterministic --out-dir " +
                         dir.string());
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["p"] == 7);
  CHECK(j["phi_order"] == 2);
  CHECK(j["bound"] == 300);
  CHECK(j["prime_count"] == 62);  // pi(300)
  CHECK(j["early_exited"] == false);

  // auxiliary q = 3, 5, 11, 13 (good, >= 3, != 7)
  REQUIRE(j["certificates"].size() == 4);
  const std::vector<uint64_t> qs = {3, 5, 11, 13};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(j["certificates"][i]["q"] == qs[i]);
    const std::string file = j["certificates"][i]["file"].get<std::string>();
    const json cert = json::parse(slurp(dir / file));
    CHECK(cert["q"] == qs[i]);
    CHECK(j["certificates"][i]["count"] == cert["primes"].size());
    CHECK(j["certificates"][i]["vacuous"] == cert["vacuous"]);
  }
  CHECK(j["certificates"][0]["vacuous"] == true);
  CHECK(j["certificates"][1]["vacuous"] == true);
  CHECK(j["certificates"][2]["vacuous"] == false);

  // union == set union of the per-q members; uncovered is disjoint from it
  std::set<uint64_t> expect;
  for (size_t i = 0; i < 4; ++i) {
    const json cert = json::parse(slurp(dir / j["certificates"][i]["file"].get<std::string>()));
    for (const auto& l : cert["primes"]) expect.insert(l.get<uint64_t>());
  }
  CHECK(j["union"].get<std::set<uint64_t>>() == expect);
  for (const auto& l : j["uncovered"]) CHECK(!expect.count(l.get<uint64_t>()));

  // densities block is consistent with the counts
  CHECK(j["densities"]["per_q"].size() == 4);
  CHECK(j["densities"]["union"]["count"] == expect.size());

  // S11 at 300 is a subset of the union
  for (uint64_t l : kS11At300) CHECK(expect.count(l));
}

TEST_CASE("union early exit skips the remaining auxiliary primes") {
  const fs::path dir = scratch_dir() / "union_early";
  const auto r = run_cli("union " + curve_file() +
                         " --p 7 --bound 13 --q-max 23 --early-exit --deterministic --out-dir " +
                         dir.string());
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["early_exited"] == true);
  CHECK(j["uncovered"].empty());
  CHECK(j["union"] == json::array({5, 11, 13}));
  // coverage completes at q = 19; no certificate for q = 23 is written
  CHECK(fs::exists(dir / "certificate_q19.json"));
  CHECK(!fs::exists(dir / "certificate_q23.json"));
}

TEST_CASE("union with no eligible auxiliary primes exits 1") {
  CHECK(run_cli("union " + curve_file() + " --p 7 --bound 300 --q-min 8 --q-max 10").exit_code ==
        1);
}
