#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "conehelly/cli.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = conehelly::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("conehelly_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

const std::string kA2 = R"({"d":2,"role":"generators","vectors":[[1,0],[-1,0],[0,1],[0,-1]]})";
const std::string kE2 = R"({"d":3,"role":"normals","vectors":[[1,0,0],[-1,0,0],[0,1,0],[0,-1,0]]})";

// Runs a command on stdin, checks success, then feeds the report to --verify.
json run_and_verify(const std::vector<std::string>& args, const std::string& instance) {
  const Outcome o = call(args, instance);
  REQUIRE_MESSAGE(o.code == 0, o.err);
  const std::string path = write_temp(args.front() + ".json", o.out);
  const Outcome v = call({"--verify", path});
  const std::string diag = v.out + v.err;
  CHECK_MESSAGE(v.code == 0, diag);
  CHECK(v.report()["result"]["ok"] == true);
  return o.report();
}

}  // namespace

TEST_CASE("instance subcommands round-trip through --verify") {
  CHECK(run_and_verify({"lineality"}, kA2)["result"]["dim"] == 2);
  CHECK(run_and_verify({"posbasis"}, kA2)["result"]["size"] == 4);
  CHECK(run_and_verify({"reay"}, kA2)["result"]["partition"]["r"] == 2);
  CHECK(run_and_verify({"maxcone"}, kE2)["result"]["max_cone_dim"] == 1);
  CHECK(run_and_verify({"solution-rank"}, kE2)["result"]["rank"] == 1);
  CHECK(run_and_verify({"polar-lineality"}, kE2)["result"]["dim"] == 1);
  CHECK(run_and_verify({"membership", "--point", "1,1"}, kA2)["result"]["in_cone"] == true);
  const json out = run_and_verify({"membership", "--point", "1,1"},
                                  R"({"d":2,"role":"generators","vectors":[[1,0]]})");
  CHECK(out["result"]["in_cone"] == false);
  const json cone = run_and_verify({"extract-cone", "-k", "1"}, kE2);
  CHECK(cone["result"]["feasible"] == true);
  CHECK(cone["result"]["generators"].size() == 1);
  CHECK(run_and_verify({"extract-cone", "-k", "2"}, kE2)["result"]["feasible"] == false);

  const json pos = run_and_verify({"helly-pos", "-k", "1"}, kA2);
  CHECK(pos["result"]["hypothesis"] == false);
  CHECK(pos["result"]["witness"]["subset_indices"] == json::array({0, 1, 2, 3}));
  CHECK(pos["bounds"]["h"] == 4);
  const json cone_helly = run_and_verify({"helly-cone", "-k", "2"}, kE2);
  CHECK(cone_helly["result"]["conclusion"] == false);
  CHECK(run_and_verify({"corollary", "-k", "1"}, kE2)["result"]["conclusion"] == true);
  CHECK(run_and_verify({"flat-helly", "-k", "1"}, kE2)["result"]["witness"]["subset_indices"] ==
        json::array({0, 2}));
}

TEST_CASE("input from a file and pretty output") {
  const std::string path = write_temp("a2.json", kA2);
  const Outcome o = call({"lineality", "-i", path});
  CHECK(o.code == 0);
  CHECK(o.report()["result"]["dim"] == 2);
  const Outcome p = call({"lineality", "-i", path, "--pretty"});
  CHECK(p.code == 0);
  CHECK(p.out.find("result.dim: 2") != std::string::npos);
}

TEST_CASE("gen output is a valid instance") {
  const Outcome g = call({"gen", "--example", "axis-pairs", "--d", "3", "--k", "2"});
  REQUIRE(g.code == 0);
  CHECK(g.report()["vectors"].size() == 4);
  CHECK(call({"lineality"}, g.out).report()["result"]["dim"] == 2);

  const Outcome e1 = call({"gen", "--example", "example1", "--d", "2"});
  CHECK(e1.report()["role"] == "normals");
  CHECK(e1.report()["vectors"] == json::parse("[[1,0],[0,1],[-1,-1]]"));

  const Outcome r = call({"gen", "--example", "random", "--d", "3", "--n", "8", "--bound", "2", "--seed", "1"});
  std::ifstream f(std::string(CONEHELLY_FIXTURES) + "/random_d3_n8_b2_s1.json");
  CHECK(r.report() == json::parse(f));
}

TEST_CASE("verify-tightness") {
  CHECK(call({"verify-tightness", "--example", "1", "--d", "4"}).report()["result"]["tight"] == true);
  CHECK(call({"verify-tightness", "--example", "2", "--d", "4", "--k", "2"}).report()["result"]["tight"] == true);
}

TEST_CASE("fuzz") {
  const Outcome zero = call({"fuzz", "--trials", "0"});
  CHECK(zero.code == 0);
  CHECK(zero.report()["result"]["failures"] == 0);
  const Outcome a = call({"fuzz", "--trials", "5", "--seed", "12"});
  const Outcome b = call({"fuzz", "--trials", "5", "--seed", "12"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
  CHECK(call({"lineality"}, "not json").code == 2);
  CHECK(call({"lineality"}, R"({"d":2,"vectors":[[1,0]]})").code == 2);
  CHECK(call({"lineality"}, R"({"d":2,"role":"generators","vectors":[[1]]})").code == 2);
  CHECK(call({"lineality"}, R"({"d":2,"role":"generators","vectors":[["1/0",1]]})").code == 2);
  CHECK(call({"maxcone"}, R"({"d":2,"role":"normals","vectors":[[0,0]]})").code == 2);
  CHECK(call({"extract-cone", "-k", "5"}, kE2).code == 2);
  CHECK(call({"lineality", "-i", "/nonexistent/file.json"}).code == 2);

  std::string big = R"({"d":1,"role":"generators","vectors":[)";
  for (int i = 0; i < 25; ++i) big += (i ? ",[1]" : "[1]");
  big += "]}";
  CHECK(call({"helly-pos", "-k", "1"}, big).code == 3);

  const Outcome good = call({"helly-pos", "-k", "1"}, kA2);
  json tampered = good.report();
  tampered["result"]["witness"]["subset_indices"] = json::array({0, 1, 2});
  const Outcome bad = call({"--verify", write_temp("tampered.json", tampered.dump())});
  CHECK(bad.code == 4);
  CHECK(bad.report()["result"]["ok"] == false);
}

TEST_CASE("rational entries survive a round trip") {
  const Outcome o = call({"lineality"}, R"({"d":2,"role":"generators","vectors":[["1/2",0],["-3/4",0]]})");
  REQUIRE(o.code == 0);
  CHECK(o.report()["inputs"]["instance"]["vectors"] == json::parse(R"([["1/2",0],["-3/4",0]])"));
  CHECK(o.report()["result"]["dim"] == 1);
}
