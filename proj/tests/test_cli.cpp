#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Process-level tests for the command line tool: exit codes, determinism,
// and the machine-readable outputs.

namespace {

const std::string kCli = KUGA_CLI_PATH;
const std::string kFixtures = KUGA_FIXTURE_DIR;
const std::string kTmp = KUGA_TMP_DIR;

struct RunResult {
  int exit_code = -1;
  std::string output; // stdout + stderr
};

RunResult run(const std::string &args) {
  const std::string out_path = kTmp + "/cli_out.txt";
  const std::string command = kCli + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  r.output.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return r;
}

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spit(const std::string &path, const std::string &content) {
  std::ofstream out(path);
  out << content;
}

} // namespace

TEST_CASE("check: consistent fixture exits 0") {
  const RunResult r = run("check " + kFixtures + "/genus3_hyperelliptic.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("kuga 0.1.0\n") == 0);
  CHECK(r.output.find("q_f=1 (inferred)") != std::string::npos);
  CHECK(r.output.find("status: consistent") != std::string::npos);
}

TEST_CASE("check: violated family exits 1") {
  const std::string path = kTmp + "/violated.json";
  std::string doc = slurp(kFixtures + "/genus3_hyperelliptic.json");
  const auto pos = doc.find("{\"1\": 2}");
  REQUIRE(pos != std::string::npos);
  doc.replace(pos, 8, "{\"1\": 3}");
  spit(path, doc);
  const RunResult r = run("check " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("status: violated") != std::string::npos);
}

TEST_CASE("check: malformed input exits 2") {
  const std::string path = kTmp + "/broken.json";
  spit(path, "{\"genus\": 3,");
  CHECK(run("check " + path).exit_code == 2);
  CHECK(run("check " + kTmp + "/no_such_file.json").exit_code == 2);

  spit(path, R"({"genus": 3, "base_genus": 0, "hyperelliptic": true, "fibers": [], "x": 1})");
  const RunResult r = run("check " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("unknown key") != std::string::npos);
}

TEST_CASE("check: --json emits the report without the version header") {
  const std::string out = kTmp + "/report.json";
  const RunResult r =
      run("check " + kFixtures + "/genus4_hyperelliptic.json --json " + out);
  CHECK(r.exit_code == 0);
  const std::string doc = slurp(out);
  CHECK(doc.find("\"status\": \"consistent\"") != std::string::npos);
  CHECK(doc.find("\"omega2\": \"36\"") != std::string::npos);
  CHECK(doc.find("kuga 0.1.0") == std::string::npos);
}

TEST_CASE("scan: summary line and byte-identical reruns") {
  const RunResult a = run("scan general --g-max 8");
  const RunResult b = run("scan general --g-max 8");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("max feasible g = 4") != std::string::npos);

  const RunResult h = run("scan hyperelliptic --g-max 8");
  CHECK(h.exit_code == 0);
  CHECK(h.output.find("g\tq_f\tregime\tverdict\tcertificate") != std::string::npos);
}

TEST_CASE("scan: every small-genus hyperelliptic cell is feasible") {
  const RunResult r = run("scan hyperelliptic --g-max 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("infeasible") == std::string::npos);
  CHECK(r.output.find("max feasible g = 3") != std::string::npos);
}

TEST_CASE("scan: certificates file") {
  const std::string out = kTmp + "/certs.json";
  const RunResult r = run("scan hyperelliptic --g-max 4 --regime nc-nonempty --certificates " + out);
  CHECK(r.exit_code == 0);
  const std::string doc = slurp(out);
  CHECK(doc.find("\"verdict\": \"infeasible\"") != std::string::npos);
  CHECK(doc.find("\"refutation\"") != std::string::npos);
  CHECK(doc.find("\"witness\"") != std::string::npos);
}

TEST_CASE("scan: usage errors exit 2") {
  CHECK(run("scan general").exit_code == 2);                    // missing --g-max
  CHECK(run("scan elliptic --g-max 5").exit_code == 2);         // unknown kind
  CHECK(run("scan general --g-max 1").exit_code == 2);          // empty range
  CHECK(run("scan general --g-max 5 --regime bogus").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}
