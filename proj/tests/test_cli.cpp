#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "frontier/data_io.hpp"
#include "frontier/manifest.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kWorkDir = fs::temp_directory_path() / "frontier_cli_tests";

int run_cli(const std::string& args) {
  const std::string command = std::string(FRONTIER_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct Workspace {
  Workspace() {
    fs::remove_all(kWorkDir);
    fs::create_directories(kWorkDir);
    write_file(kWorkDir / "toy3.txt",
               "3\n0.1 0.31622776601683794\n0.2 0.31622776601683794\n"
               "0.3 0.31622776601683794\n1 1 1.0\n2 2 1.0\n3 3 1.0\n");
    write_file(kWorkDir / "toy6.txt",
               "6\n0.0042 0.031\n0.0070 0.044\n0.0029 0.027\n0.0055 0.039\n"
               "0.0071 0.052\n0.0048 0.035\n"
               "1 1 1\n2 2 1\n3 3 1\n4 4 1\n5 5 1\n6 6 1\n"
               "1 2 0.5\n1 3 0.4\n2 3 0.45\n4 5 0.55\n4 6 0.35\n5 6 0.6\n");
  }
  fs::path file(const std::string& name) const { return kWorkDir / name; }
  std::string arg(const std::string& name) const { return (kWorkDir / name).string(); }
};

} // namespace

TEST_CASE("exact writes a frontier CSV with its manifest") {
  Workspace ws;
  REQUIRE(run_cli("exact --data " + ws.arg("toy3.txt") + " --lambdas 2 --out " +
                  ws.arg("std.csv")) == 0);
  const auto records = frontier::load_frontier(ws.arg("std.csv"));
  CHECK(records.size() == 2); // the two extreme portfolios
  CHECK(fs::exists(ws.file("std.csv.manifest")));
  const std::string manifest = slurp(ws.file("std.csv.manifest"));
  CHECK(manifest.find("command=exact") != std::string::npos);
  CHECK(manifest.find("out_digest=fnv1a64:") != std::string::npos);
}

TEST_CASE("exact rejects a lambda count below 2 as a usage error") {
  Workspace ws;
  CHECK(run_cli("exact --data " + ws.arg("toy3.txt") + " --lambdas 1 --out " +
                ws.arg("x.csv")) == 2);
}

TEST_CASE("exact fails with exit 1 on unreadable or malformed data") {
  Workspace ws;
  CHECK(run_cli("exact --data " + ws.arg("missing.txt") + " --lambdas 2 --out " +
                ws.arg("x.csv")) == 1);
  write_file(ws.file("bad.txt"), "not a number\n");
  CHECK(run_cli("exact --data " + ws.arg("bad.txt") + " --lambdas 2 --out " + ws.arg("x.csv")) ==
        1);
}

TEST_CASE("nn records the evaluation count and reruns byte-identically") {
  Workspace ws;
  const std::string base = "nn --data " + ws.arg("toy6.txt") +
                           " --k 2 --eps 0.01 --delta-max 1 --dlambda 0.5 --pop 4 --reps 1 "
                           "--seed 11 --out ";
  REQUIRE(run_cli(base + ws.arg("a.csv")) == 0);
  REQUIRE(run_cli(base + ws.arg("b.csv")) == 0);
  CHECK(slurp(ws.file("a.csv")) == slurp(ws.file("b.csv")));
  CHECK(frontier::file_digest(ws.arg("a.csv")) == frontier::file_digest(ws.arg("b.csv")));

  // M + (M/2)(2N) = 4 + 2*12 = 28 per lambda, 3 lambdas
  const std::string manifest = slurp(ws.file("a.csv.manifest"));
  CHECK(manifest.find("evaluations=84") != std::string::npos);
}

TEST_CASE("nn validates its flags and bounds") {
  Workspace ws;
  CHECK(run_cli("nn --data " + ws.arg("toy6.txt") +
                " --k 0 --eps 0.01 --delta-max 1 --out " + ws.arg("x.csv")) == 2);
  CHECK(run_cli("nn --data " + ws.arg("toy6.txt") +
                " --k 2 --eps 0.01 --delta-max 1 --dlambda 1.5 --out " + ws.arg("x.csv")) == 2);
  // k assets of at most 0.4 each cannot reach the unit budget
  CHECK(run_cli("nn --data " + ws.arg("toy6.txt") +
                " --k 2 --eps 0.01 --delta-max 0.4 --out " + ws.arg("x.csv")) == 1);
}

TEST_CASE("nn accepts a per-asset bounds file") {
  Workspace ws;
  write_file(ws.file("bounds.txt"), "1 0.05 0.6\n2 0.0 0.9\n");
  REQUIRE(run_cli("nn --data " + ws.arg("toy6.txt") +
                  " --k 2 --eps 0.01 --delta-max 1 --dlambda 1 --pop 4 --reps 1 --seed 3 "
                  "--bounds " +
                  ws.arg("bounds.txt") + " --out " + ws.arg("nb.csv")) == 0);
  for (const auto& rec : frontier::load_frontier(ws.arg("nb.csv"))) {
    for (const auto& [asset, weight] : rec.weights) {
      if (asset == 1) CHECK(weight <= 0.6 + 1e-12);
    }
  }
}

TEST_CASE("metrics compares heuristic output against the standard frontier") {
  Workspace ws;
  REQUIRE(run_cli("exact --data " + ws.arg("toy6.txt") + " --lambdas 50 --out " +
                  ws.arg("std.csv")) == 0);

  // a subset of the standard frontier has zero distance to it
  auto standard = frontier::load_frontier(ws.arg("std.csv"));
  std::vector<frontier::FrontierRecord> subset = {standard.front(), standard.back()};
  frontier::save_frontier(subset, ws.arg("sub.csv"));
  REQUIRE(run_cli("metrics --standard " + ws.arg("std.csv") + " --heuristic " +
                  ws.arg("sub.csv") + " --evaluations 100 --out " + ws.arg("rep.txt") +
                  " --csv " + ws.arg("rep.csv")) == 0);
  const std::string report = slurp(ws.file("rep.txt"));
  CHECK(report.find("0.000000") != std::string::npos);
  const std::string csv = slurp(ws.file("rep.csv"));
  CHECK(csv.find("persistence") != std::string::npos);
  CHECK(csv.find("average_distance") != std::string::npos);

  CHECK(run_cli("metrics --heuristic " + ws.arg("sub.csv") + " --out " + ws.arg("r.txt")) == 2);

  frontier::save_frontier({}, ws.arg("empty.csv"));
  CHECK(run_cli("metrics --standard " + ws.arg("std.csv") + " --heuristic " +
                ws.arg("empty.csv") + " --out " + ws.arg("r.txt")) == 1);
}

TEST_CASE("metrics picks up the evaluation count from the heuristic manifest") {
  Workspace ws;
  REQUIRE(run_cli("exact --data " + ws.arg("toy6.txt") + " --lambdas 20 --out " +
                  ws.arg("std.csv")) == 0);
  REQUIRE(run_cli("nn --data " + ws.arg("toy6.txt") +
                  " --k 2 --eps 0.01 --delta-max 1 --dlambda 1 --pop 4 --reps 1 --seed 5 "
                  "--out " +
                  ws.arg("nn.csv")) == 0);
  REQUIRE(run_cli("metrics --standard " + ws.arg("std.csv") + " --heuristic " + ws.arg("nn.csv") +
                  " --out " + ws.arg("rep.txt")) == 0);
  const std::string report = slurp(ws.file("rep.txt"));
  CHECK(report.find("Persistence") != std::string::npos);
}

TEST_CASE("merge combines tagged frontiers and reports survival") {
  Workspace ws;
  REQUIRE(run_cli("exact --data " + ws.arg("toy6.txt") + " --lambdas 50 --out " +
                  ws.arg("std.csv")) == 0);
  auto standard = frontier::load_frontier(ws.arg("std.csv"));
  std::vector<frontier::FrontierRecord> a = {standard.front()};
  std::vector<frontier::FrontierRecord> b = {standard.back()};
  frontier::save_frontier(a, ws.arg("a.csv"));
  frontier::save_frontier(b, ws.arg("b.csv"));

  REQUIRE(run_cli("merge --standard " + ws.arg("std.csv") + " --inputs AA=" + ws.arg("a.csv") +
                  " BB=" + ws.arg("b.csv") + " --out " + ws.arg("m.csv") + " --report " +
                  ws.arg("m.txt") + " --report-csv " + ws.arg("m_report.csv")) == 0);
  CHECK(frontier::load_frontier(ws.arg("m.csv")).size() == 2);
  const std::string csv = slurp(ws.file("m_report.csv"));
  CHECK(csv.find("survival,AA,surviving,1") != std::string::npos);
  CHECK(csv.find("contribution,AA,percentage,50") != std::string::npos);

  // single input contributes everything
  REQUIRE(run_cli("merge --standard " + ws.arg("std.csv") + " --inputs AA=" + ws.arg("a.csv") +
                  " --out " + ws.arg("m1.csv") + " --report " + ws.arg("m1.txt") +
                  " --report-csv " + ws.arg("m1_report.csv")) == 0);
  CHECK(slurp(ws.file("m1_report.csv")).find("contribution,AA,percentage,100") !=
        std::string::npos);

  // duplicate tags are ambiguous
  CHECK(run_cli("merge --standard " + ws.arg("std.csv") + " --inputs AA=" + ws.arg("a.csv") +
                " AA=" + ws.arg("b.csv") + " --out " + ws.arg("x.csv") + " --report " +
                ws.arg("x.txt")) == 2);
}

TEST_CASE("every command is deterministic at fixed inputs") {
  Workspace ws;
  const std::string exact_cmd =
      "exact --data " + ws.arg("toy6.txt") + " --lambdas 30 --out ";
  REQUIRE(run_cli(exact_cmd + ws.arg("e1.csv")) == 0);
  REQUIRE(run_cli(exact_cmd + ws.arg("e2.csv")) == 0);
  CHECK(slurp(ws.file("e1.csv")) == slurp(ws.file("e2.csv")));
}
