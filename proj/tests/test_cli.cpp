#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#ifndef GPTSTAT_CLI_PATH
#error "GPTSTAT_CLI_PATH must point at the built command-line binary"
#endif
#ifndef GPTSTAT_FIXTURES_DIR
#error "GPTSTAT_FIXTURES_DIR must point at the fixtures directory"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the CLI with stderr folded into stdout so error text is visible too.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GPTSTAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  RunResult r;
  r.output = output;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const char* name) {
  return std::string(GPTSTAT_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("basis listing prints indexed states") {
  const RunResult r = run_cli("basis 2 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0: (2,0)\n1: (1,1)\n2: (0,2)\n");

  const RunResult one = run_cli("basis 1 2");
  CHECK(one.exit_code == 0);
  CHECK(one.output == "0: (1,0)\n1: (0,1)\n");
}

TEST_CASE("degenerate basis arguments exit with a usage error") {
  CHECK(run_cli("basis 0 2").exit_code == 2);
  CHECK(run_cli("basis 2").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("removal command emits the exact matrix") {
  const RunResult r = run_cli("removal 2 2");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["N_in"] == 2);
  CHECK(j["N_out"] == 1);
  CHECK(j["rows"][0] == nlohmann::json::array({1.0, 0.5, 0.0}));
  CHECK(j["rows"][1] == nlohmann::json::array({0.0, 0.5, 1.0}));
}

TEST_CASE("removal chains drop to the requested particle count") {
  const RunResult r = run_cli("removal 4 2 --to 2");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["N_in"] == 4);
  CHECK(j["N_out"] == 2);
  CHECK(run_cli("removal 2 2 --to 5").exit_code == 2);
}

TEST_CASE("family command reproduces the half-half matrix") {
  const RunResult r = run_cli("family 0.5");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["rows"][1][1] == 0.0);
  CHECK(j["rows"][0][0] == 0.25);
  CHECK(run_cli("family 1.5").exit_code == 2);
}

TEST_CASE("quantum command needs an angle or a unitary") {
  const RunResult r = run_cli("quantum --theta 0.78539816339744828 2");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(std::abs(j["rows"][1][1].get<double>()) < 1e-15);
  CHECK(run_cli("quantum").exit_code == 2);
  CHECK(run_cli("quantum --theta 0.1 25").exit_code == 2);
}

TEST_CASE("quon command emits the deformed matrix or fails at the boundary") {
  const RunResult r = run_cli("quon 1 0.5");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["rows"][1][1] == 0.0);

  const RunResult fermion = run_cli("quon -- -1 0.5");
  CHECK(fermion.exit_code == 1);
  CHECK(fermion.output.find("zero norm") != std::string::npos);

  CHECK(run_cli("quon 2 0.5").exit_code == 2);
}

TEST_CASE("quon sweep prints a CSV grid") {
  const RunResult r = run_cli("quon --sweep");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.rfind("q,R,P(1,0)->(1,0)", 0) == 0);
  // Fermionic rows leave the undefined same-mode entries empty.
  CHECK(r.output.find("\n-1,0.5,") != std::string::npos);
  CHECK(r.output.find(",,") != std::string::npos);
}

TEST_CASE("check verdicts map to exit codes") {
  const RunResult bad = run_cli("check " + fixture("t_imp.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("evolution") != std::string::npos);
  CHECK(bad.output.find("FAIL") != std::string::npos);

  const RunResult good = run_cli("--json check " + fixture("family_0.5.json"));
  REQUIRE(good.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(good.output);
  CHECK(j["realizable"] == true);
  CHECK(j["theta"].get<double>() ==
        doctest::Approx(0.7853981634).epsilon(1e-9));

  CHECK(run_cli("check " + fixture("not_stochastic.json")).exit_code == 1);
  CHECK(run_cli("check /nonexistent.json").exit_code == 2);
}

TEST_CASE("check accepts an explicit single-particle matrix") {
  const RunResult r = run_cli("check " + fixture("family_0.5.json") +
                              " --single " + fixture("single_bs.json"));
  CHECK(r.exit_code == 0);

  const RunResult imp = run_cli("check " + fixture("t_imp.json") +
                                " --single " + fixture("single_bs.json"));
  CHECK(imp.exit_code == 1);
}

TEST_CASE("json flag produces parseable reports") {
  const RunResult r = run_cli("--json check " + fixture("t_imp.json"));
  CHECK(r.exit_code == 1);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["doubly_stochastic"]["pass"] == true);
  CHECK(j["no_interaction"]["pass"] == true);
  CHECK(j["evolution"]["pass"] == false);
  CHECK(j["beta"] == 0.5);
  CHECK(j["realizable"] == false);
}

TEST_CASE("output is byte-identical across runs") {
  const RunResult a = run_cli("family 0.3");
  const RunResult b = run_cli("family 0.3");
  CHECK(a.output == b.output);
  const RunResult c = run_cli("quon --sweep");
  const RunResult d = run_cli("quon --sweep");
  CHECK(c.output == d.output);
}

TEST_CASE("out flag writes the same bytes to a file") {
  const std::string path = "cli_out_test.json";
  const RunResult direct = run_cli("removal 2 2");
  const RunResult redirected = run_cli("removal 2 2 --out " + path);
  REQUIRE(redirected.exit_code == 0);
  CHECK(redirected.output.empty());
  FILE* f = fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string content;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) {
    content.append(buf.data(), got);
  }
  fclose(f);
  remove(path.c_str());
  CHECK(content == direct.output);
}

TEST_CASE("demo reports every headline identity as passing") {
  const RunResult r = run_cli("--json demo");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json rows = nlohmann::json::parse(r.output);
  REQUIRE(rows.size() == 10);
  for (const auto& row : rows) {
    CAPTURE(row["name"].get<std::string>());
    CHECK(row["pass"] == true);
  }
}
