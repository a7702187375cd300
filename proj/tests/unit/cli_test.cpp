#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "polymc/model_io.hpp"
#include "support.hpp"

using polymc::read_file;
using polymc::write_file;
using polymc::ResultsDocument;
using polymc::load_results_json;
using polymc::verify_results_for_model;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = polymc::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("polymc_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string corpus(const char* name) { return polymc::testing::corpus(name).string(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("help texts match the golden files") {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"--help"}, "help.txt"},
        {{"check", "--help"}, "help_check.txt"},
        {{"validate", "--help"}, "help_validate.txt"},
        {{"convert", "--help"}, "help_convert.txt"},
        {{"convert", "obj", "--help"}, "help_convert_obj.txt"},
        {{"gen-maze", "--help"}, "help_gen_maze.txt"},
    };
    for (const auto& [args, file] : cases) {
      CAPTURE(file);
      const Outcome o = run(args);
      CHECK(o.code == 0);
      CHECK(o.out == read_file(polymc::testing::golden_dir() / file));
    }
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"check", corpus("square.spec"), "--workers", "0"}).code == 2);
    CHECK(run({"check", corpus("square.spec"), "--validate", "sometimes"}).code == 2);
    CHECK(run({"gen-maze", "--grid", "3,3", "x.json"}).code == 2);
    const Outcome missing = run({"check", "missing.spec"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("missing.spec") != std::string::npos);
  }

  TEST_CASE("check writes a results file bound to the model") {
    TempDir dir;
    const Outcome o = run({"check", corpus("square.spec"), "--out", dir.path.string(), "--workers", "2", "--timing"});
    CHECK(o.code == 0);
    CHECK(o.out.find("reach_r_g: 7 cells") != std::string::npos);
    for (const char* col : {"parse", "kripke", "check", "total"}) CHECK(o.out.find(col) != std::string::npos);
    const ResultsDocument doc = load_results_json(read_file(dir / "results.json"));
    CHECK(doc.cell_count == 11);
    REQUIRE(doc.results.size() == 3);
    CHECK(doc.results[0].label == "reach_r_g");
    CHECK_NOTHROW(verify_results_for_model(doc, read_file(corpus("square.json"))));
  }

  TEST_CASE("--model overrides the spec's load command") {
    TempDir dir;
    const Outcome o = run({"check", corpus("square.spec"), "--model", corpus("strip.json"), "--out", dir.path.string()});
    CHECK(o.code == 0);
    CHECK(load_results_json(read_file(dir / "results.json")).cell_count == 19);
  }

  TEST_CASE("check failures exit with 1") {
    TempDir dir;
    write_file(dir / "bad.spec", "load \"" + corpus("square.json") + "\"\nsave \"x\" ap(\"nope\")\n");
    const Outcome o = run({"check", dir / "bad.spec", "--out", dir.path.string()});
    CHECK(o.code == 1);
    CHECK(o.err.find("nope") != std::string::npos);
    CHECK_FALSE(fs::exists(dir / "results.json"));

    write_file(dir / "syntax.spec", "let x = \n");
    CHECK(run({"check", dir / "syntax.spec"}).code == 2);
    write_file(dir / "noload.spec", "save \"x\" tt\n");
    CHECK(run({"check", dir / "noload.spec"}).code == 2);
  }

  TEST_CASE("worker count does not change the results file") {
    TempDir dir;
    std::string first;
    for (const char* w : {"1", "2", "8"}) {
      const std::string out = dir / w;
      REQUIRE(run({"check", corpus("maze.spec"), "--out", out, "--workers", w}).code == 0);
      const std::string bytes = read_file(fs::path(out) / "results.json");
      if (first.empty()) first = bytes;
      CHECK(bytes == first);
    }
  }

  TEST_CASE("worker count from the environment") {
    TempDir dir;
    ::setenv(polymc::cli::kWorkersEnv, "3", 1);
    CHECK(run({"check", corpus("square.spec"), "--out", dir.path.string()}).code == 0);
    ::setenv(polymc::cli::kWorkersEnv, "garbage", 1);
    CHECK(run({"check", corpus("square.spec"), "--out", dir.path.string()}).code == 0);
    ::unsetenv(polymc::cli::kWorkersEnv);
  }

  TEST_CASE("validate") {
    TempDir dir;
    CHECK(run({"validate", corpus("strip.json"), "--mode", "geometric"}).code == 0);
    write_file(dir / "flat.json",
               R"({"coordinates":[[0,0],[1,1],[2,2]],"atomNames":[],"simplexes":[{"points":[0,1,2]}]})");
    const Outcome comb = run({"validate", dir / "flat.json"});
    CHECK(comb.code == 0);
    CHECK(comb.out.find("not listed") != std::string::npos);
    const Outcome geo = run({"validate", dir / "flat.json", "--mode", "geometric"});
    CHECK(geo.code == 1);
    CHECK(geo.err.find("affine-dependence") != std::string::npos);
    CHECK(run({"check", corpus("square.spec"), "--model", dir / "flat.json", "--validate", "geometric",
               "--out", dir.path.string()})
              .code == 1);
    CHECK(run({"validate", dir / "absent.json"}).code == 2);
  }

  TEST_CASE("convert obj") {
    TempDir dir;
    const Outcome o = run({"convert", "obj", corpus("anatomy.obj"), dir / "a.json"});
    CHECK(o.code == 0);
    CHECK(o.err.find("warning") != std::string::npos);
    CHECK(read_file(dir / "a.json") == read_file(corpus("anatomy.json")));
    write_file(dir / "quad.obj", "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3 4\n");
    CHECK(run({"convert", "obj", dir / "quad.obj", dir / "q.json"}).code == 2);
    CHECK(run({"convert", "obj", corpus("anatomy.obj"), dir / "b.json", "--levels", "2"}).code == 0);
  }

  TEST_CASE("gen-maze is deterministic") {
    TempDir dir;
    for (const char* name : {"m1.json", "m2.json"}) {
      CHECK(run({"gen-maze", "--grid", "3,3,3", "--seed", "42", dir / name}).code == 0);
    }
    CHECK(read_file(dir / "m1.json") == read_file(dir / "m2.json"));
    CHECK(run({"gen-maze", "--grid", "5,5,3", "--black-fraction", "0.3", "--seed", "42", dir / "c.json"}).code == 0);
    CHECK(read_file(dir / "c.json") == read_file(corpus("mazeModel.json")));
    CHECK(run({"gen-maze", "--grid", "3,3,3", "--black-fraction", "2", dir / "x.json"}).code == 2);
  }
}
