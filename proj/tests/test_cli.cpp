#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "fusionkit/cli.hpp"

using namespace fusionkit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("fusionkit-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", fixtures::corpus("rings/ising.json")}).code == 0);
  TempDir dir;
  const auto shape = dir.write("shape.json", R"({"kind": "ring", "labels": ["1", "x"], "dual": [0, 1], "N": [[[1]]]})");
  CHECK(run({"validate", shape}).code == 2);
  CHECK(run({"validate", (dir.path / "missing.json").string()}).code == 2);

  // Mutation of the Ising file: sigma * sigma loses psi.
  std::string text = slurp(fixtures::corpus("rings/ising.json"));
  const auto at = text.find("[2, 2, 1, 1]");
  REQUIRE(at != std::string::npos);
  text.replace(at, 12, "[2, 2, 1, 0]");
  const auto broken = dir.write("broken.json", text);
  const auto r = run({"validate", broken});
  CHECK(r.code == 1);
  CHECK(has(r.out, "associativity"));
}

TEST_CASE("unknown subcommands and bad flags are input errors") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--profile", "modular", "validate", "x.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("chartab") {
  const auto r = run({"chartab", "--hypergroup", fixtures::corpus("rings/ising.json")});
  CHECK(r.code == 0);
  CHECK(has(r.out, R"("export":"table")"));
  CHECK(has(r.out, R"("export":"hypergroup")"));
  TempDir dir;
  const auto one = dir.write("one.json", R"({"kind": "ring", "labels": ["1"], "dual": [0], "N": [[0, 0, 0, 1]]})");
  CHECK(run({"chartab", one}).code == 0);
  CHECK(run({"chartab", fixtures::corpus("rings/fibonacci.json")}).code == 0);

  const auto vec = dir.write("vec_s3.json", io::ring_to_json(fixtures::vec_s3(), "Vec(S3)", Profile::fusion, false).dump());
  const auto nc = run({"chartab", vec});
  CHECK(nc.code == 1);
  CHECK(has(nc.out, "chartab.commutative"));
}

TEST_CASE("burnside and harada") {
  CHECK(run({"burnside", fixtures::corpus("rings/rep_S3.json")}).code == 0);
  CHECK(run({"burnside", fixtures::corpus("rings/Z4.json")}).code == 0);
  CHECK(run({"burnside", fixtures::corpus("rings/fibonacci.json")}).code == 1);

  const auto g = run({"harada", fixtures::corpus("groups/006_S3.json")});
  CHECK(g.code == 0);
  CHECK(has(g.out, R"("check":"harada.group")"));
  CHECK(run({"harada", fixtures::corpus("rings/ising.json")}).code == 0);
  const auto f = run({"harada", fixtures::corpus("rings/fibonacci.json")});
  CHECK(f.code == 1);
  CHECK(has(f.out, "ring not weakly integral"));
}

TEST_CASE("support and class sums") {
  const auto s = run({"support", "--subring", "psi", fixtures::corpus("rings/ising.json")});
  CHECK(s.code == 0);
  CHECK(has(s.out, R"("support":[0,1])"));
  const auto bad = run({"support", "--subring", "nope", fixtures::corpus("rings/ising.json")});
  CHECK(bad.code == 2);
  CHECK(run({"class-sums", fixtures::corpus("rings/rep_S3.json")}).code == 0);
}

TEST_CASE("typecheck and enumerate") {
  const auto n = run({"typecheck", "--N", "6300"});
  CHECK(n.code == 0);
  CHECK(has(n.out, "(p, q, r, d) = (2, 3, 5, 7)"));
  CHECK(run({"typecheck", "--type", "(1,12)", "--modular"}).code == 0);
  CHECK(run({"typecheck", "--type", "1,4;2,2", "--modular"}).code == 1);
  CHECK(run({"typecheck", "--type", "1,4;x"}).code == 2);
  CHECK(run({"typecheck"}).code == 2);
  CHECK(run({"typecheck", fixtures::corpus("types/N36.json")}).code == 0);

  const auto e = run({"enumerate", "1"});
  CHECK(e.code == 0);
  CHECK(has(e.out, "1 types"));
  const auto twelve = run({"enumerate", "12", "--unit-part", "--coprime-squares"});
  CHECK(has(twelve.out, R"x("text":"(1,12)")x"));
  CHECK_FALSE(has(twelve.out, R"x("text":"(1,4; 2,2)")x"));
  CHECK(run({"enumerate", "2000", "--cap", "100"}).code == 2);
}

TEST_CASE("group subcommand emits rings") {
  TempDir dir;
  const auto out = (dir.path / "rep.json").string();
  CHECK(run({"group", fixtures::corpus("groups/008_Q8.json"), "--emit-ring", "rep", "--out", out}).code == 0);
  const auto f = io::load_file(out);
  CHECK(std::get<io::RingFile>(f.content).ring.rank() == 5);
  const auto full = run({"group", fixtures::corpus("groups/012_A4.json")});
  CHECK(full.code == 0);
  CHECK(has(full.out, "rep.class-sizes"));
  CHECK(run({"group", fixtures::corpus("rings/ising.json")}).code == 2);
}

TEST_CASE("numeric non-convergence exits with 3") {
  const auto r = run({"--tol", "1e-30", "chartab", fixtures::corpus("rings/fibonacci.json")});
  CHECK(r.code == 3);
  CHECK(has(r.out, R"("check":"numeric")"));
}

TEST_CASE("sweeps") {
  TempDir empty;
  const auto e = run({"sweep", empty.path.string()});
  CHECK(e.code == 0);
  CHECK(has(e.out, "zero checks"));
  CHECK(run({"sweep", (empty.path / "nope").string()}).code == 2);

  TempDir dir;
  for (const auto* name : {"ising.json", "fibonacci.json", "rep_S3.json"})
    fs::copy_file(fixtures::corpus(std::string("rings/") + name), dir.path / name);
  const auto ok = run({"sweep", dir.path.string()});
  CHECK(ok.code == 0);
  CHECK(has(ok.out, R"("expected_failures":3)"));

  std::string text = slurp(fixtures::corpus("rings/rep_S3.json"));
  // V * V = 1 + V breaks associativity against sgn * V = V.
  text.replace(text.find("[2, 2, 1, 1]"), 12, "[2, 2, 1, 0]");
  dir.write("rep_S3.json", text);
  const auto bad = run({"sweep", dir.path.string()});
  CHECK(bad.code == 1);
  CHECK(has(bad.err, "rep_S3.json"));

  dir.write("zz_garbage.json", "{not json");
  CHECK(run({"sweep", dir.path.string()}).code == 2);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"--json", "sweep", fixtures::corpus("rings")};
  const auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.code == 0);
  CHECK_FALSE(has(a.out, "elapsed"));
  CHECK(has(run({"--timing", "validate", fixtures::corpus("rings/Z2.json")}).out, "elapsed_seconds"));
  // Global flags are accepted after the subcommand too.
  CHECK(run({"validate", fixtures::corpus("rings/Z2.json"), "--seed", "5"}).code == 0);
}
