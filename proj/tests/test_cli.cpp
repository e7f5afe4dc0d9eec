#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tc/io.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(TCOUNT_BIN) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tcount_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_rows(const std::string& csv) {
  return static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) - 1;
}

std::string karate() { return tc::testing::karate_path().string(); }

}  // namespace

TEST_CASE("count") {
  auto r = run("count " + karate() + " --algo Bader");
  CHECK(r.code == 0);
  CHECK(r.out == "45\n");

  CHECK(run("count " + karate() + " --algo IR --reorder").out == "45\n");

  const fs::path empty = scratch("empty.txt");
  std::ofstream(empty) << "# nothing here\n";
  r = run("count " + empty.string() + " --algo FH");
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");

  CHECK(run("count " + karate() + " --algo NOPE").code == 2);
  CHECK(run("count /nonexistent/g.txt --algo FH").code == 1);
  CHECK(run("count " + karate()).code == 2);

  const fs::path bad = scratch("bad.txt");
  std::ofstream(bad) << "0 1\n1 x\n";
  CHECK(run("count " + bad.string() + " --algo FH").code == 1);
}

TEST_CASE("gen-rmat") {
  const fs::path a = scratch("r6a.txt"), b = scratch("r6b.txt");
  auto r = run("gen-rmat --scale 6 --seed 9 --out " + a.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("pairs=1024") != std::string::npos);
  REQUIRE(run("gen-rmat --scale 6 --seed 9 --out " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));

  const fs::path c = scratch("r6c.txt");
  REQUIRE(run("gen-rmat --scale 6 --seed 10 --out " + c.string()).code == 0);
  CHECK(slurp(a) != slurp(c));

  CHECK(run("gen-rmat --scale 6 --params 0.5,0.5,0.5,0.5 --out " + c.string()).code == 2);
  CHECK(run("gen-rmat --scale 0 --out " + c.string()).code == 2);
  CHECK(run("gen-rmat --out " + c.string()).code == 2);

  const fs::path bin = scratch("r8.bin");
  REQUIRE(run("gen-rmat --scale 8 --out " + bin.string()).code == 0);
  const auto ir = run("count " + bin.string() + " --algo IR");
  const auto bader = run("count " + bin.string() + " --algo BaderD");
  CHECK(ir.code == 0);
  CHECK(ir.out == bader.out);
  CHECK(run("count " + bin.string() + " --algo FH --input-format text").code == 1);

  const fs::path r7 = scratch("r7.txt");
  REQUIRE(run("gen-rmat --scale 7 --edge-factor 16 --seed 4 --out " + r7.string()).code == 0);
  std::ifstream in(r7);
  const auto want = tc::testing::DenseGraph(tc::load_snap_edge_list(in)).triangle_count();
  CHECK(want > 0);
  CHECK(run("count " + r7.string() + " --algo FH").out == std::to_string(want) + "\n");
}

TEST_CASE("bench") {
  auto r = run("bench --graphs " + karate() + " --algos all --runs 2 --format csv");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "graph,n,m,triangles,k_pct,algorithm,runs,mean_seconds");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.starts_with("karate,34,78,45,35.9,"));
  }
  CHECK(rows == 20);

  const fs::path cfg = scratch("bench.cfg");
  std::ofstream(cfg) << "graph.K = " << karate() << "\nalgorithms = FH,Bader\nruns = 1\nformat = markdown\n";
  r = run("bench --config " + cfg.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("| K | 34 | 78 | 45 |") != std::string::npos);

  const fs::path out = scratch("bench.json");
  r = run("bench --config " + cfg.string() + " --format json --out " + out.string());
  CHECK(r.code == 0);
  CHECK(slurp(out).starts_with("["));

  r = run("bench --graphs rmat:7:16:1,rmat:7:16:2,rmat:7:16:3 --algos all --runs 1 --format csv");
  CHECK(r.code == 0);
  CHECK(count_rows(r.out) == 3 * 20);

  CHECK(run("bench --graphs " + karate() + " --algos FH,NOPE").code == 2);
  CHECK(run("bench --graphs " + karate() + " --runs 0").code == 2);
  CHECK(run("bench").code == 2);
}

TEST_CASE("info") {
  auto r = run("info " + karate());
  CHECK(r.code == 0);
  CHECK(r.out.find("n=34 m=78") != std::string::npos);
  CHECK(r.out.find("k=35.9") != std::string::npos);

  const fs::path k4 = scratch("k4.txt");
  std::ofstream(k4) << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  CHECK(run("info " + k4.string()).out.find("k=50.0") != std::string::npos);

  const fs::path tree = scratch("tree.txt");
  std::ofstream(tree) << "0 1\n0 2\n1 3\n1 4\n2 5\n";
  CHECK(run("info " + tree.string()).out.find("k=0.0") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("count " + karate() + " --algo FH --bogus").code == 2);
  CHECK(run("info " + karate() + ".unknown_ext").code == 2);
}
