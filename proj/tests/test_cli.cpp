#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_howe_bin;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

/** Runs the verification binary with the given arguments. */
RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string err_path = "/tmp/howe_cli_stderr.txt";
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += g_howe_bin + " " + args + " 2>" + err_path;
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) result.out.append(buffer, n);
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  std::stringstream ss;
  ss << err.rdbuf();
  result.err = ss.str();
  return result;
}

nlohmann::json parse_json(const std::string& text) {
  return nlohmann::json::parse(text);
}

}  // namespace

TEST_CASE("verify succeeds with exit code zero") {
  RunResult r = run_cli("verify structure grading --trials 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("pass") != std::string::npos);
  CHECK(r.out.find("overall: pass") != std::string::npos);
}

TEST_CASE("json report carries the schema fields") {
  RunResult r = run_cli("verify grading --format json --trials 2");
  REQUIRE(r.code == 0);
  nlohmann::json doc = parse_json(r.out);
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("tool_version").is_string());
  CHECK(doc.at("command") == "verify");
  CHECK(doc.at("config").at("l") == 2);
  CHECK(doc.at("config").at("max_degree") == 4);
  CHECK(doc.at("config").at("trials") == 2);
  CHECK(doc.at("config").at("seed") == 0);
  REQUIRE(doc.at("checks").size() == 1u);
  const nlohmann::json& check = doc.at("checks").at(0);
  CHECK(check.at("name") == "grading");
  CHECK(check.at("status") == "pass");
  CHECK(check.at("params").is_object());
  CHECK(check.at("seed").is_number_unsigned());
  CHECK(doc.at("overall") == "pass");
  CHECK(!doc.contains("elapsed_ms"));
}

TEST_CASE("reports are byte identical across runs") {
  const std::string args = "verify relations ladder --format json --trials 3 --seed 5";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("corrupted operators fail with a witness and exit one") {
  RunResult r = run_cli("verify grading --corrupt f-minus --format json --trials 3");
  CHECK(r.code == 1);
  nlohmann::json doc = parse_json(r.out);
  CHECK(doc.at("overall") == "fail");
  CHECK(doc.at("checks").at(0).at("status") == "fail");
  CHECK(!doc.at("checks").at(0).at("witness").get<std::string>().empty());
}

TEST_CASE("historical suite names are accepted") {
  RunResult r = run_cli("verify lemma12 --format json --trials 2");
  REQUIRE(r.code == 0);
  nlohmann::json doc = parse_json(r.out);
  REQUIRE(doc.at("checks").size() == 1u);
  CHECK(doc.at("checks").at(0).at("name") == "commutation");

  RunResult r2 = run_cli("verify theorem9 corollary10 --format json --trials 2");
  REQUIRE(r2.code == 0);
  nlohmann::json doc2 = parse_json(r2.out);
  REQUIRE(doc2.at("checks").size() == 2u);
  CHECK(doc2.at("checks").at(0).at("name") == "relations");
  CHECK(doc2.at("checks").at(1).at("name") == "ladder");
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli("verify nosuchsuite").code == 2);
  CHECK(run_cli("verify --l 0").code == 2);
  CHECK(run_cli("verify --l 99").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("verify --format yaml").code == 2);
  CHECK(run_cli("verify --corrupt everything").code == 2);
}

TEST_CASE("zero trials is vacuous but not a failure") {
  RunResult r = run_cli("verify grading equivariance --format json --trials 0");
  CHECK(r.code == 0);
  CHECK(r.err.find("vacuous") != std::string::npos);
  nlohmann::json doc = parse_json(r.out);
  for (const auto& check : doc.at("checks")) CHECK(check.at("status") == "vacuous");
}

TEST_CASE("seed precedence is flag over environment over config") {
  const std::string config_path = "/tmp/howe_cli_config.json";
  {
    std::ofstream cfg(config_path);
    cfg << "{\"seed\": 111, \"trials\": 2}\n";
  }
  RunResult from_config = run_cli("verify structure --format json --config " + config_path);
  REQUIRE(from_config.code == 0);
  nlohmann::json doc = parse_json(from_config.out);
  CHECK(doc.at("config").at("seed") == 111);
  CHECK(doc.at("config").at("trials") == 2);

  RunResult from_env =
      run_cli("verify structure --format json --config " + config_path, "HOWE_SEED=222");
  CHECK(parse_json(from_env.out).at("config").at("seed") == 222);

  RunResult from_flag = run_cli(
      "verify structure --format json --config " + config_path + " --seed 333", "HOWE_SEED=222");
  CHECK(parse_json(from_flag.out).at("config").at("seed") == 333);

  CHECK(run_cli("verify structure", "HOWE_SEED=notanumber").code == 2);
}

TEST_CASE("reports can be written to a file") {
  const std::string out_path = "/tmp/howe_cli_report.json";
  std::remove(out_path.c_str());
  RunResult r = run_cli("verify structure --format json --trials 1 --out " + out_path);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out_path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(parse_json(ss.str()).at("overall") == "pass");
}

TEST_CASE("highest weight census needs enough polynomial degree") {
  RunResult shallow = run_cli("hw --degree 0 --format json");
  CHECK(shallow.code == 1);
  nlohmann::json sdoc = parse_json(shallow.out);
  CHECK(sdoc.at("checks").at(0).at("params").at("found") < 18);

  RunResult deep = run_cli("hw --degree 6 --format json");
  REQUIRE(deep.code == 0);
  nlohmann::json ddoc = parse_json(deep.out);
  CHECK(ddoc.at("checks").at(0).at("params").at("found") == 18);
  CHECK(ddoc.at("checks").at(0).at("params").at("expected") == 18);
}

TEST_CASE("decompose reports the summand table") {
  RunResult r = run_cli("decompose --format json");
  REQUIRE(r.code == 0);
  nlohmann::json doc = parse_json(r.out);
  CHECK(doc.at("command") == "decompose");
  const nlohmann::json& params = doc.at("checks").at(0).at("params");
  CHECK(params.at("total_summands") == 18);
  CHECK(params.at("rows").size() == 10u);
}

TEST_CASE("duality subcommand runs the tower checks") {
  RunResult r = run_cli("duality --trials 3 --format json");
  REQUIRE(r.code == 0);
  nlohmann::json doc = parse_json(r.out);
  REQUIRE(doc.at("checks").size() == 3u);
  CHECK(doc.at("checks").at(0).at("name") == "duality-equivariance");
  CHECK(doc.at("checks").at(1).at("name") == "duality-injectivity");
  CHECK(doc.at("checks").at(2).at("name") == "commutant");
}

int main(int argc, char** argv) {
  std::vector<char*> forwarded;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--howe-bin=", 0) == 0) {
      g_howe_bin = arg.substr(11);
    } else {
      forwarded.push_back(argv[i]);
    }
  }
  if (g_howe_bin.empty()) {
    std::fprintf(stderr, "usage: test_cli --howe-bin=<path to howe-osc>\n");
    return 2;
  }
  doctest::Context context(static_cast<int>(forwarded.size()), forwarded.data());
  return context.run();
}
