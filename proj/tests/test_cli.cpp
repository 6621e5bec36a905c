#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ndscape/cli.hpp"
#include "ndscape/io.hpp"

using namespace ndl;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ndscape_cli_" + std::to_string(std::rand()) + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("royal road piped into the degree report") {
  const auto ref = run({"ref", "--family", "royal-road", "--n", "16", "--blocks", "4"});
  REQUIRE(ref.code == 0);
  const auto rep = run({"analyze", "--report", "degrees"}, ref.out);
  REQUIRE(rep.code == 0);
  CHECK(rep.out.rfind("# ndscape ", 0) == 0);
  CHECK(rep.out.find("# mean=14 std=2\n") != std::string::npos);
}

TEST_CASE("flat landscape degree report") {
  TempDir dir;
  save_ndl(dir / "flat.ndl", Landscape::flat(4, 0.5));
  const auto rep = run({"analyze", "--report", "degrees", "--in", dir / "flat.ndl"});
  REQUIRE(rep.code == 0);
  CHECK(rep.out.find("degree,weight\n0,0\n1,0\n2,0\n3,0\n4,1\n") != std::string::npos);
}

TEST_CASE("gen is byte-for-byte reproducible") {
  TempDir dir;
  REQUIRE(run({"window", "--p", "3", "--w", "4", "--n", "10", "--out", dir / "w34.csv"}).code == 0);
  const std::vector<std::string> a{"gen", "--n", "10", "--target", dir / "w34.csv", "--seed", "7", "--out", dir / "a.ndl"};
  const std::vector<std::string> b{"gen", "--n", "10", "--target", dir / "w34.csv", "--seed", "7", "--out", dir / "b.ndl"};
  REQUIRE(run(a).code == 0);
  REQUIRE(run(b).code == 0);
  CHECK(slurp(dir / "a.ndl") == slurp(dir / "b.ndl"));
  REQUIRE(run({"gen", "--n", "10", "--target", dir / "w34.csv", "--seed", "8", "--out", dir / "c.ndl"}).code == 0);
  CHECK(slurp(dir / "a.ndl") != slurp(dir / "c.ndl"));
}

TEST_CASE("full pipeline through trap, reports, ga, extend and convolve") {
  TempDir dir;
  REQUIRE(run({"window", "--p", "0", "--w", "3", "--n", "8", "--out", dir / "w.csv"}).code == 0);
  const auto gen = run({"gen", "--n", "8", "--target", dir / "w.csv", "--seed", "3", "--out", dir / "g.ndl",
                        "--trace", dir / "trace.csv", "--log", dir / "log.csv"});
  REQUIRE(gen.code == 0);
  CHECK(slurp(dir / "trace.csv").find("move,energy\n0,") != std::string::npos);
  CHECK(slurp(dir / "log.csv").find("genotype,degree\n") != std::string::npos);

  const auto trap = run({"trap", "--in", dir / "g.ndl", "--seed", "4", "--networks", dir / "nets.csv", "--out",
                         dir / "t.ndl"});
  REQUIRE(trap.code == 0);
  CHECK(slurp(dir / "nets.csv").find("network_id,size,centroid_distance,fitness\n") != std::string::npos);
  const Landscape t = load_ndl(dir / "t.ndl");
  CHECK(t[Genotype{0}] == 1.0);

  for (const std::string report : {"networks", "ranks", "fdc", "scatter"}) {
    const auto r = run({"analyze", "--in", dir / "t.ndl", "--report", report});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# ndscape ", 0) == 0);
  }
  const auto scatter = run({"analyze", "--in", dir / "t.ndl", "--report", "scatter", "--sample", "10", "--seed", "9"});
  CHECK(scatter.out.find("seed=9") != std::string::npos);
  CHECK(std::count(scatter.out.begin(), scatter.out.end(), '\n') == 12);

  const auto ga = run({"ga", dir / "t.ndl", "--runs", "20", "--jobs", "2", "--seed", "5", "--trap", "deceptive"});
  REQUIRE(ga.code == 0);
  CHECK(ga.out.find("landscape,mean_degree,trap,success_rate,ci_half_width\n") != std::string::npos);
  CHECK(ga.out.find(",deceptive,") != std::string::npos);
  auto rows = [](const std::string& s) { return s.substr(s.find('\n')); };
  CHECK(rows(run({"ga", dir / "t.ndl", "--runs", "20", "--jobs", "1", "--seed", "5"}).out) ==
        rows(run({"ga", dir / "t.ndl", "--runs", "20", "--jobs", "3", "--seed", "5"}).out));

  REQUIRE(run({"extend", dir / "t.ndl", dir / "t.ndl", "--out", dir / "x.xndl"}).code == 0);
  const ExtendedLandscape x = load_xndl(dir / "x.xndl");
  CHECK(x.total_bits() == 16);
  const auto xd = run({"analyze", "--in", dir / "x.xndl", "--report", "degrees"});
  REQUIRE(xd.code == 0);
  REQUIRE(run({"analyze", "--in", dir / "t.ndl", "--report", "degrees", "--out", dir / "d.csv"}).code == 0);
  const auto conv = run({"convolve", dir / "d.csv", dir / "d.csv"});
  REQUIRE(conv.code == 0);
  // The xndl degree report and the convolution agree after their header lines.
  CHECK(xd.out.substr(xd.out.find("degree,weight")) == conv.out.substr(conv.out.find("degree,weight")));
  CHECK(run({"ga", dir / "x.xndl", "--runs", "5"}).code == 0);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"window", "--p", "1"}).code == 1);
  CHECK(run({"window", "--p", "1", "--w", "2", "--frobnicate"}).code == 1);
  CHECK(run({"ref", "--family", "spin-glass"}).code == 1);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("gen") != std::string::npos);
}

TEST_CASE("io and parse errors exit 2 and name the line") {
  CHECK(run({"analyze", "--in", "/nonexistent/file.ndl"}).code == 2);
  const auto bad = run({"analyze"}, "NDL 1 2\n0.5\n0.5\nnope\n0.5\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 4") != std::string::npos);
  TempDir dir;
  {
    std::ofstream f(dir / "bad.csv");
    f << "degree,weight\n0,0.5\n1,abc\n";
  }
  const auto csv = run({"gen", "--n", "1", "--target", dir / "bad.csv"});
  CHECK(csv.code == 2);
  CHECK(csv.err.find("line 3") != std::string::npos);
  CHECK(csv.err.find("bad.csv") != std::string::npos);
}

TEST_CASE("contract violations exit 3") {
  CHECK(run({"window", "--p", "10", "--w", "4", "--n", "8"}).code == 3);
  TempDir dir;
  REQUIRE(run({"window", "--p", "0", "--w", "2", "--n", "6", "--out", dir / "w.csv"}).code == 0);
  CHECK(run({"gen", "--n", "7", "--target", dir / "w.csv"}).code == 3);
  save_ndl(dir / "flat.ndl", Landscape::flat(3, 0.5));
  const auto r = run({"analyze", "--in", dir / "flat.ndl", "--report", "fdc"});
  CHECK(r.code == 3);
  CHECK(r.err.find("FDC undefined") != std::string::npos);
}

TEST_CASE("the installed binary pipes and reports exit codes") {
  const std::string exe = NDSCAPE_CLI_PATH;
  const std::string cmd = exe + " ref --family royal-road --n 8 --blocks 2 | " + exe +
                          " analyze --report degrees > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const int status = std::system((exe + " nope 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(status) == 1);
}
