#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "corr/io.hpp"

using namespace corr;
namespace fs = std::filesystem;

namespace {

std::string data_path(const std::string& name) { return std::string(CORR_DATA_DIR) + "/" + name; }

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() / ("corrsolve_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Sandbox() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, const std::string& out_file, const std::string& err_file) {
  std::string cmd = std::string(CORRSOLVE_BIN) + " " + args + " > " + out_file + " 2> " + err_file;
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("pipeline: convert lists then check consistency") {
  Sandbox sb;
  int rc = run("convert --graph " + data_path("path3.pg") + " --from-lists " + data_path("lists1.la") + " --out " +
                   sb.path("x.ca") + " --map " + sb.path("x.map"),
               sb.path("out"), sb.path("err"));
  REQUIRE(rc == 0);
  CorrespondenceAssignment c = parse_ca_file(sb.path("x.ca"));
  CHECK(c.k() == 3);
  CHECK(slurp(sb.path("x.map")).find("qmap") == 0);

  rc = run("check --graph " + data_path("path3.pg") + " --assignment " + sb.path("x.ca"), sb.path("out"),
           sb.path("err"));
  CHECK(rc == 0);
  CHECK(slurp(sb.path("out")).find("globally-consistent: yes") != std::string::npos);
}

TEST_CASE("pipeline: reduce, solve, extend, check-coloring") {
  Sandbox sb;
  std::string g = data_path("tetrad1.pg"), c = data_path("tetrad1.ca");
  int rc = run("reduce --graph " + g + " --assignment " + c + " --tetrad 2,3,4,5 --out-prefix " + sb.path("red"),
               sb.path("out"), sb.path("err"));
  REQUIRE(rc == 0);
  CHECK(slurp(sb.path("out")).find("merged 11 into 1") != std::string::npos);

  rc = run("solve --graph " + sb.path("red.pg") + " --assignment " + sb.path("red.ca") + " --out " +
               sb.path("red.col"),
           sb.path("out"), sb.path("err"));
  REQUIRE(rc == 0);

  rc = run("extend --orig-graph " + g + " --orig-assignment " + c + " --ext " + sb.path("red.ext") + " --coloring " +
               sb.path("red.col") + " --out " + sb.path("full.col"),
           sb.path("out"), sb.path("err"));
  REQUIRE(rc == 0);

  rc = run("check-coloring --graph " + g + " --assignment " + c + " --coloring " + sb.path("full.col") + " --total",
           sb.path("out"), sb.path("err"));
  CHECK(rc == 0);
  CHECK(slurp(sb.path("out")).find("valid") == 0);
}

TEST_CASE("solve exit codes: SAT, UNSAT, invalid") {
  Sandbox sb;
  // SAT as a validated target.
  int rc = run("solve --graph " + data_path("c9.pg") + " --assignment " + sb.path("c9.ca"), sb.path("out"),
               sb.path("err"));
  CHECK(rc == 2);  // assignment file missing: invalid input

  std::ofstream ca(sb.path("c9.ca"));
  ca << "correspondence k=3\n";
  for (int i = 1; i < 9; ++i) ca << "edge " << i << " " << i + 1 << ": id\n";
  ca << "edge 1 9: id\n";
  ca.close();
  std::ofstream col(sb.path("c9.col"));
  for (int i = 1; i <= 9; ++i) col << "color " << i << ": " << (i == 9 ? 3 : i % 2 + 1) << "\n";
  col.close();
  rc = run("solve --graph " + data_path("c9.pg") + " --assignment " + sb.path("c9.ca") + " --precolor " +
               sb.path("c9.col") + " --as-target",
           sb.path("out"), sb.path("err"));
  CHECK(rc == 0);

  // UNSAT: 2-coloring an odd cycle with straight full edges.
  std::ofstream ca2(sb.path("c9k2.ca"));
  ca2 << "correspondence k=2\n";
  for (int i = 1; i < 9; ++i) ca2 << "edge " << i << " " << i + 1 << ": id\n";
  ca2 << "edge 1 9: id\n";
  ca2.close();
  rc = run("solve --graph " + data_path("c9.pg") + " --assignment " + sb.path("c9k2.ca"), sb.path("out"),
           sb.path("err"));
  CHECK(rc == 1);
  CHECK(slurp(sb.path("out")).find("UNSAT") != std::string::npos);

  // Malformed graph file: exit 2 and a line number on stderr.
  std::ofstream bad(sb.path("bad.pg"));
  bad << "planegraph n=2\nrot 1: 3\nrot 2: 1\n";
  bad.close();
  rc = run("solve --graph " + sb.path("bad.pg") + " --assignment " + sb.path("c9.ca"), sb.path("out"), sb.path("err"));
  CHECK(rc == 2);
  CHECK(slurp(sb.path("err")).find("line 2") != std::string::npos);
}

TEST_CASE("audit exit codes and transfer log") {
  Sandbox sb;
  // C9 with S on the boundary: the inner face goes negative, exit 1, and the
  // report cross-links the failed minimality predicate (a).
  int rc = run("audit --graph " + data_path("c9.pg") + " --out " + sb.path("rep.txt") + " --log " + sb.path("t.tsv"),
               sb.path("out"), sb.path("err"));
  CHECK(rc == 1);
  std::string rep = slurp(sb.path("rep.txt"));
  CHECK(rep.find("total -12 conserved") != std::string::npos);
  CHECK(rep.find("violation") != std::string::npos);
  CHECK(rep.find("cooccurs basic-a") != std::string::npos);
  std::string tsv = slurp(sb.path("t.tsv"));
  CHECK(tsv.find("rule\tsource\tsink\tamount") == 0);
  CHECK(tsv.find("R4\tf") != std::string::npos);
  CHECK(tsv.find("1/2") != std::string::npos);

  // C12 with S = boundary: all bounds hold, exit 0.
  std::ofstream c12(sb.path("c12.pg"));
  c12 << "planegraph n=12\n";
  for (int i = 1; i <= 12; ++i)
    c12 << "rot " << i << ": " << (i + 10) % 12 + 1 << " " << i % 12 + 1 << "\n";
  c12 << "S:";
  for (int i = 1; i <= 12; ++i) c12 << " " << i;
  c12 << "\n";
  c12.close();
  rc = run("audit --graph " + sb.path("c12.pg") + " --out " + sb.path("rep2.txt"), sb.path("out"), sb.path("err"));
  CHECK(rc == 0);
  CHECK(slurp(sb.path("rep2.txt")).find("violations 0") != std::string::npos);
}

TEST_CASE("straighten subcommand") {
  Sandbox sb;
  std::ofstream ca(sb.path("bent.ca"));
  ca << "correspondence k=3\nedge 1 2: 1>2, 2>1, 3>3\n";
  ca.close();
  int rc = run("straighten --assignment " + sb.path("bent.ca") + " --edges 1-2 --out " + sb.path("straight.ca") +
                   " --relabeling " + sb.path("r.txt"),
               sb.path("out"), sb.path("err"));
  REQUIRE(rc == 0);
  CorrespondenceAssignment c = parse_ca_file(sb.path("straight.ca"));
  CHECK(c.between(1, 2).straight());
  CHECK(slurp(sb.path("r.txt")).find("relabeling") == 0);

  // The non-straightenable triangle: exit 1 with the witness.
  std::ofstream tri(sb.path("tri.ca"));
  tri << "correspondence k=3\nedge 1 2: 1>1, 2>2\nedge 2 3: 1>1, 3>3\nedge 1 3: 1>1, 3>2\n";
  tri.close();
  rc = run("straighten --assignment " + sb.path("tri.ca") + " --edges 1-2,2-3,1-3 --out " + sb.path("x.ca"),
           sb.path("out"), sb.path("err"));
  CHECK(rc == 1);
  CHECK(slurp(sb.path("err")).find("not full") != std::string::npos);
}

TEST_CASE("configs and verify subcommands") {
  Sandbox sb;
  int rc = run("configs --graph " + data_path("tetrad1.pg") + " --assignment " + data_path("tetrad1.ca") +
                   " --report " + sb.path("rep.txt"),
               sb.path("out"), sb.path("err"));
  REQUIRE(rc == 0);
  std::string rep = slurp(sb.path("rep.txt"));
  CHECK(rep.find("tetrad 2 3 4 5 x1=10 x4=11 y1=1 y4=6") != std::string::npos);
  CHECK(rep.find("S-disjoint") != std::string::npos);

  rc = run("verify --trials 12 --seed 3 --jobs 2 --tsv " + sb.path("v.tsv"), sb.path("out"), sb.path("err"));
  CHECK(rc == 0);
  CHECK(slurp(sb.path("out")).find("12 SAT, 0 UNSAT, 0 rejected") != std::string::npos);
  std::string tsv = slurp(sb.path("v.tsv"));
  CHECK(tsv.find("trial\tfamily") == 0);

  // Deliberately out-of-class input: rejected by validation with exit 2.
  std::ofstream c5(sb.path("c5.pg"));
  c5 << "planegraph n=5\n";
  for (int i = 1; i <= 5; ++i) c5 << "rot " << i << ": " << (i + 3) % 5 + 1 << " " << i % 5 + 1 << "\n";
  c5.close();
  std::ofstream ca(sb.path("c5.ca"));
  ca << "correspondence k=3\n";
  for (int i = 1; i < 5; ++i) ca << "edge " << i << " " << i + 1 << ": id\n";
  ca << "edge 1 5: id\n";
  ca.close();
  rc = run("solve --graph " + sb.path("c5.pg") + " --assignment " + sb.path("c5.ca") + " --as-target", sb.path("out"),
           sb.path("err"));
  CHECK(rc == 2);
  CHECK(slurp(sb.path("err")).find("cycle of length 5") != std::string::npos);
}

TEST_CASE("gen emits instances that its own validators accept") {
  Sandbox sb;
  int rc = run("gen --seed 9 --index 4 --out-prefix " + sb.path("inst"), sb.path("out"), sb.path("err"));
  REQUIRE(rc == 0);
  rc = run("check --graph " + sb.path("inst.pg") + " --assignment " + sb.path("inst.ca"), sb.path("out"),
           sb.path("err"));
  CHECK(rc == 0);
}
