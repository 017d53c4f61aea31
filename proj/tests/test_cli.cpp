#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

using std::string;

namespace {

struct RunResult {
  int exit_code;
  string out;
};

RunResult run(const string& args) {
  string cmd = string(MINKLEN_CLI_PATH) + " " + args;
  string out_file = string(std::tmpnam(nullptr)) + ".out";
  int rc = std::system((cmd + " > " + out_file + " 2>/dev/null").c_str());
  int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out_file);
  string out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::remove(out_file.c_str());
  return {code, out};
}

string write_temp(const string& contents) {
  string path = string(std::tmpnam(nullptr)) + ".json";
  std::ofstream out(path);
  out << contents;
  return path;
}

}  // namespace

TEST_CASE("length command") {
  string t0 = write_temp(R"({"dim": 2, "vertices": [[1,0],[0,1],[2,2]]})");
  RunResult r = run("length " + t0);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("L = 1") != string::npos);

  RunResult w = run("length --witness --oracle " + t0);
  CHECK(w.exit_code == 0);

  string sharp = write_temp("0 0 0\n1 3 0\n0 2 3\n4 1 3\n");
  RunResult s = run("length " + sharp);
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("L = 1") != string::npos);

  RunResult checked = run("length --check " + sharp);
  CHECK(checked.exit_code == 0);
  CHECK(checked.out.find("agree") != string::npos);

  std::remove(t0.c_str());
  std::remove(sharp.c_str());
}

TEST_CASE("input errors exit with code 2") {
  string bad = write_temp(R"({"dim": 2, "vertices": []})");
  CHECK(run("length " + bad).exit_code == 2);
  CHECK(run("length /nonexistent/path.json").exit_code == 2);
  CHECK(run("random --count 1 --box 0").exit_code == 2);
  CHECK(run("sum " + bad).exit_code == 2);  // sum needs at least two files
  std::remove(bad.c_str());
}

TEST_CASE("oracle budget exhaustion exits with code 3") {
  string cube = write_temp("0 0 0\n3 0 0\n0 3 0\n0 0 3\n3 3 0\n3 0 3\n0 3 3\n3 3 3\n");
  RunResult r = run("length --oracle --oracle-budget 10 " + cube);
  CHECK(r.exit_code == 3);
  std::remove(cube.c_str());
}

TEST_CASE("sum command") {
  string tetra = write_temp(R"({"dim": 3, "vertices": [[-1,-1,-1],[1,0,0],[0,1,0],[0,0,1]]})");
  RunResult r = run("sum " + tetra + " " + tetra);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("L(P1) = 1") != string::npos);
  CHECK(r.out.find("L(P2) = 1") != string::npos);
  CHECK(r.out.find("L(sum) = 2") != string::npos);

  string t0 = write_temp(R"({"dim": 2, "vertices": [[1,0],[0,1],[2,2]]})");
  RunResult mix = run("sum " + tetra + " " + t0);
  CHECK(mix.exit_code == 2);

  RunResult two_t0 = run("sum --oracle " + t0 + " " + t0);
  CHECK(two_t0.exit_code == 0);
  CHECK(two_t0.out.find("L(sum) = 3") != string::npos);

  std::remove(tetra.c_str());
  std::remove(t0.c_str());
}

TEST_CASE("classify command") {
  string tetra = write_temp(R"({"dim": 3, "vertices": [[-1,-1,-1],[1,0,0],[0,1,0],[0,0,1]]})");
  RunResult r = run("classify " + tetra);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("5 lattice points") != string::npos);
  CHECK(r.out.find("(10)") != string::npos);

  string t0 = write_temp(R"({"dim": 2, "vertices": [[1,0],[0,1],[2,2]]})");
  RunResult rt0 = run("classify " + t0);
  CHECK(rt0.exit_code == 0);
  CHECK(rt0.out.find("T0") != string::npos);

  string big = write_temp(R"({"dim": 2, "vertices": [[0,0],[2,0],[0,2]]})");
  RunResult rbig = run("classify " + big);
  CHECK(rbig.exit_code == 0);
  CHECK(rbig.out.find("L = 2") != string::npos);

  std::remove(tetra.c_str());
  std::remove(t0.c_str());
  std::remove(big.c_str());
}

TEST_CASE("random --diff finds no mismatches and is byte-deterministic") {
  RunResult a = run("random --count 25 --box 3 --seed 7 --diff --json");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("\"mismatches\": 0") != string::npos);
  RunResult b = run("random --count 25 --box 3 --seed 7 --diff --json");
  CHECK(a.out == b.out);
}

TEST_CASE("selftest passes") {
  RunResult r = run("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[FAIL]") == string::npos);
}
