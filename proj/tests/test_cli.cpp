#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

// Every test drives the installed binary through popen and inspects exit
// code plus captured stdout.  stderr is dropped so diagnostics from the
// failure-path tests do not pollute the harness output.

struct RunResult {
  int code;
  std::string out;
};

static RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("CORNERDET_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

static std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

static std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

TEST_CASE("det emits the documented json bytes at precision 12") {
  RunResult r = run_cli("det --symbol fh:2,2 --n 6 --precision 12");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"n\":6,\"exact\":336.0,\"oracle\":336.0,\"asymptotic\":108.0}\n");
}

TEST_CASE("det emits the documented csv bytes at precision 12") {
  RunResult r = run_cli("det --symbol fh:2,2 --n 6 --precision 12 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "n,exact,oracle,asymptotic\n6,336.0,336.0,108.0\n");
}

TEST_CASE("det default output is full-precision json and is deterministic") {
  RunResult a = run_cli("det --symbol fh:2,2 --n 6");
  RunResult b = run_cli("det --symbol fh:2,2 --n 6");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.substr(0, 7) == "{\"n\":6,");
  CHECK(a.out.back() == '\n');

  nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j["n"] == 6);
  CHECK(j["exact"].get<double>() == doctest::Approx(336.0).epsilon(1e-10));
  CHECK(j["oracle"].get<double>() == doctest::Approx(336.0).epsilon(1e-10));
  CHECK(j["asymptotic"].get<double>() == doctest::Approx(108.0).epsilon(1e-10));
}

TEST_CASE("det omits the closed-form fields for non-product symbols") {
  RunResult r = run_cli("det --symbol laurent:-1=-0.5,0=1.25,1=-0.5 --n 6");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.contains("oracle"));
  CHECK(!j.contains("exact"));
  CHECK(!j.contains("asymptotic"));
}

TEST_CASE("ratio reports exact and lu-based quotients side by side") {
  RunResult r = run_cli("ratio --symbol fh:1,1 --n 6 --E12 1 --E21 1");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 6);
  CHECK(j["m0"] == 1);
  CHECK(j["ratio"].get<double>() == doctest::Approx(4.0 / 7.0).epsilon(1e-12));
  CHECK(j["oracle_ratio"].get<double>() ==
        doctest::Approx(4.0 / 7.0).epsilon(1e-10));
}

TEST_CASE("limit reports the asymptotic ratio with residual samples") {
  RunResult r = run_cli(
      "limit --symbol laurent:-1=-0.5,0=1.25,1=-0.5 --E12 1 --E21 1 "
      "--n-list 8,16");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["limit"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(j["n"] == nlohmann::json::array({8, 16}));
  CHECK(j["ratio"].size() == 2);
  CHECK(j["residual"].size() == 2);
  CHECK(j["residual"][1].get<double>() < j["residual"][0].get<double>());
  CHECK(j["monotone_decreasing"] == true);
}

TEST_CASE("inverse-corners returns the four m0-by-m0 blocks") {
  RunResult r = run_cli("inverse-corners --symbol fh:1,1 --n 6 --m0 2");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 6);
  CHECK(j["m0"] == 2);
  for (const char* key : {"s11", "s12", "s21", "s22"}) {
    CHECK(j[key].size() == 2);
    CHECK(j[key][0].size() == 2);
  }
  // tridiagonal (-1,2,-1) has the classical inverse min(j,k)(n+1-max(j,k))/(n+1)
  CHECK(j["s11"][0][0].get<double>() == doctest::Approx(6.0 / 7.0).epsilon(1e-12));
  CHECK(j["s11"][0][1].get<double>() == doctest::Approx(5.0 / 7.0).epsilon(1e-12));
  CHECK(j["s22"][1][1].get<double>() == doctest::Approx(6.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("fh-entry compares an inverse entry against its asymptotic form") {
  RunResult r = run_cli("fh-entry --symbol fh:2,2 --j 1 --n 6 --side top");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 6);
  CHECK(j["j"] == 1);
  CHECK(j["side"] == "top");
  CHECK(j["exact"].get<double>() == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
  CHECK(j.contains("asymptotic"));
  CHECK(j["residual"].get<double>() >= 0.0);
}

TEST_CASE("verblunsky reports recursion data for a small hermitian symbol") {
  RunResult r = run_cli("verblunsky --symbol fh:1,1 --n 2");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 2);
  CHECK(j["kappa"].get<double>() ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK(j["verblunsky"].size() == 1);
  CHECK(j["verblunsky"][0].get<double>() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(j["first_column"].size() == 2);
  CHECK(j["first_column"][0].get<double>() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(j["first_column"][1].get<double>() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("lattice emits integer determinants as raw digits") {
  RunResult r = run_cli("lattice --n 6 --cauchy-binet");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"n\":6,\"gram_det\":343,\"expected\":343,"
        "\"minors\":[7,7,7,7,7,7,7]}\n");
}

TEST_CASE("lattice marks the undersized case instead of comparing") {
  RunResult r = run_cli("lattice --n 1");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":1,\"gram_det\":5,\"degenerate\":true}\n");
}

TEST_CASE("sweep defaults to csv with one row per matrix size") {
  RunResult r = run_cli("sweep --symbol fh:2,2 --E12 1 --E21 1 --n-list 6,8");
  CHECK(r.code == 0);
  std::vector<std::string> lines = split_lines(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "n,exact_det,oracle_det,ratio,limit,residual");

  std::vector<std::string> row = split_cells(lines[1]);
  REQUIRE(row.size() == 6);
  CHECK(row[0] == "6");
  CHECK(std::stod(row[1]) == doctest::Approx(336.0).epsilon(1e-10));
  CHECK(std::stod(row[2]) == doctest::Approx(336.0).epsilon(1e-10));
  CHECK(std::stod(row[3]) == doctest::Approx(343.0 / 336.0).epsilon(1e-10));
  CHECK(std::stod(row[4]) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::stod(row[5]) == doctest::Approx(343.0 / 336.0).epsilon(1e-10));

  std::vector<std::string> next = split_cells(lines[2]);
  REQUIRE(next.size() == 6);
  CHECK(next[0] == "8");
  CHECK(std::stod(next[5]) < std::stod(row[5]));
}

TEST_CASE("sweep can emit json rows on request") {
  RunResult r = run_cli(
      "sweep --symbol fh:2,2 --E12 1 --E21 1 --n-list 6,8 --format json");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["n"] == 6);
  CHECK(j["rows"][0]["ratio"].get<double>() ==
        doctest::Approx(343.0 / 336.0).epsilon(1e-10));
}

TEST_CASE("--output writes the same bytes to a file and nothing to stdout") {
  std::string path = "/tmp/cornerdet_cli_" + std::to_string(getpid()) + ".json";
  RunResult direct = run_cli("det --symbol fh:2,2 --n 6 --precision 12");
  RunResult filed =
      run_cli("det --symbol fh:2,2 --n 6 --precision 12 --output " + path);
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());

  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("invalid input is a usage failure, not a crash") {
  CHECK(run_cli("det --symbol fh:bogus --n 6").code == 2);
  CHECK(run_cli("det --symbol nosuch:1 --n 6").code == 2);
  CHECK(run_cli("det --n 6").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("det --symbol fh:2,2 --n 6 --precision 99").code == 2);
  CHECK(run_cli("det --symbol fh:2,2 --n 6 --format xml").code == 2);
  CHECK(run_cli("lattice --n 0").code == 2);
  CHECK(run_cli("fh-entry --symbol fh:2,2 --j 1 --n 6 --side middle").code == 2);
}

TEST_CASE("numerical breakdown maps to its own exit code") {
  // the shift matrix is singular, so the inverse-corner solve must refuse
  RunResult r = run_cli("inverse-corners --symbol laurent:1=1 --n 4 --m0 1");
  CHECK(r.code == 3);
  CHECK(r.out.empty());
}

TEST_CASE("help is a successful run") {
  RunResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(r.out.find("det") != std::string::npos);
}
