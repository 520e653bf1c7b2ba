#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "hallkit/io.hpp"

using hallkit::io::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HALLKIT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string& args) {
  auto r = run(args);
  REQUIRE_MESSAGE(r.code == 0, args);
  return Json::parse(r.out);
}

const std::string kA6 = "1.3.1,2.1.1,3.1.2";
const std::string kA9 = "1.3.1,2.2.1,3.1.1";
const std::string kA15 = "1.1.1,2.1.1,2.2.1,3.1.2";
const std::string kA16 = "1.2.1,2.1.1,3.1.3";
const std::string kA18 = "1.1.1,2.1.2,3.1.3";

Json coeff_of(const Json& element, const Json& matrix) {
  for (const auto& t : element["terms"]) {
    if (t["matrix"] == matrix) return t["coeff"];
  }
  return Json::array();
}

Json matrix(const std::string& text) {
  return hallkit::io::to_json(hallkit::ThetaMatrix::parse(3, text));
}

}  // namespace

TEST_CASE("no verb is a usage error") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("enumerate") {
  CHECK(run_json("enumerate --n 3 --dim 1,2,3").size() == 18);
  CHECK(run_json("enumerate --n 3 --dim 1,2,3 --filter aperiodic").size() == 16);
  CHECK(run_json("enumerate --n 2 --dim 1,0").size() == 1);
  CHECK(run("enumerate --n 3 --dim x").code == 2);
  CHECK(run("enumerate --dim 1,2,3").code == 2);
  CHECK(run("enumerate --n 1 --dim 1").code == 2);
  CHECK(run("enumerate --n 3 --dim 1,2").code == 2);
  CHECK(run("enumerate --n 3 --dim 1,2,3 --filter odd").code == 2);
  CHECK(run("enumerate --n 3 --dim 1,2,3 --format text").code == 0);
}

TEST_CASE("hasse") {
  auto dot = run("hasse --n 3 --dim 1,2,3 --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  std::size_t nodes = 0, edges = 0;
  for (std::size_t p = 0; (p = dot.out.find("[label=", p)) != std::string::npos; ++p) ++nodes;
  for (std::size_t p = 0; (p = dot.out.find("->", p)) != std::string::npos; ++p) ++edges;
  CHECK(nodes == 18);
  CHECK(edges == 31);
  auto below = run_json("hasse --n 3 --dim 1,2,3 --below " + kA9 + " --format json");
  CHECK(below["elements"].size() == 7);
  CHECK(below["cover_edges"].size() == 8);
  auto single = run_json("hasse --n 2 --dim 1,0 --format json");
  CHECK(single["elements"].size() == 1);
  CHECK(single["cover_edges"].empty());
  CHECK(run("hasse --n 3 --dim 1,2,3 --format svg").code == 2);
  CHECK(run("hasse --n 3 --dim 1,2,3 --below 1.1.1").code == 2);
}

TEST_CASE("monomial") {
  auto j = run_json("monomial --n 3 --word 13^32^2");
  CHECK(j["expansion_u"]["terms"].size() == 2);
  CHECK(coeff_of(j["expansion_u"], matrix(kA18)) == Json::parse("[[-2,1]]"));
  CHECK(run_json("monomial --n 3 --matrix " + kA9)["expansion_u"]["terms"].size() == 7);
  CHECK(run("monomial --n 3 --word 1^").code == 2);
  CHECK(run("monomial --n 3").code == 2);
}

TEST_CASE("pbw") {
  auto j = run_json("pbw --n 3 --matrix " + kA6);
  CHECK(j["expansion_u"]["terms"].size() == 2);
  CHECK(coeff_of(j["expansion_u"], matrix(kA18)) == Json::parse("[[-4,-1]]"));
  CHECK(coeff_of(j["expansion_u"], matrix(kA6)) == Json::parse("[[0,1]]"));
  CHECK(run("pbw --n 3 --matrix " + kA15).code == 2);
  CHECK(run("pbw --n 3 --matrix 9.1.1").code == 2);
}

TEST_CASE("canonical") {
  auto hall = run_json("canonical --n 3 --matrix " + kA9 + " --algebra hall");
  auto mono = run_json("monomial --n 3 --matrix " + kA9);
  CHECK(hall["expansion_u"] == mono["expansion_u"]);
  auto up = run_json("canonical --n 3 --matrix " + kA9 + " --algebra uplus");
  CHECK(up["expansion_u"] == hall["expansion_u"]);
  CHECK(run_json("canonical --n 3 --matrix " + kA9 + " --check-agreement")["agreement"] == true);
  CHECK(run("canonical --n 3 --matrix " + kA9 + " --algebra lie").code == 2);
  CHECK(run("canonical --n 3 --matrix " + kA15 + " --algebra uplus").code == 2);
  CHECK(run("canonical --n 3 --matrix " + kA15 + " --algebra hall").code == 0);
}

TEST_CASE("hallpoly") {
  CHECK(run_json("hallpoly --n 3 --word 123^32 --target " + kA16)["gamma"] == Json::parse("[[0,1],[2,1]]"));
  CHECK(run_json("hallpoly --n 3 --word 13^32^2 --target " + kA18)["gamma"] == Json::parse("[[0,1]]"));
  CHECK(run("hallpoly --n 3 --word 12 --target " + kA16).code == 2);
}

TEST_CASE("distinguished") {
  auto j = run_json("distinguished --n 3 --matrix " + kA6);
  CHECK(j["distinguished"] == true);
  CHECK(run("distinguished --n 3 --matrix " + kA6 + " --word 123^32 --assert-distinguished").code == 0);
  auto bad = run("distinguished --n 3 --matrix " + kA6 + " --word 12^23^3 --assert-distinguished");
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out)["distinguished"] == false);
  CHECK(run("distinguished --n 3 --matrix " + kA6 + " --word 12^23^3").code == 0);
  CHECK(run_json("distinguished --n 2 --matrix 1.2.1,2.2.1 --strategy socle")["word"] == "(1,1)(1,1)");
  CHECK(run("distinguished --n 3 --matrix " + kA6 + " --strategy sideways").code == 2);
}

TEST_CASE("gext") {
  CHECK(run_json("gext --n 2 --left 1.1.1 --right 2.1.1") == Json::parse(R"({"n":2,"segments":[[1,2,1]]})"));
  CHECK(run_json("gext --n 2 --left 2.1.1 --right 1.1.1") == Json::parse(R"({"n":2,"segments":[[2,2,1]]})"));
  CHECK(run("gext --n 2 --left 1.1.1").code == 2);
}

TEST_CASE("tight") {
  CHECK(run_json("tight --word 1:1,2:2,1:1")["tight"] == true);
  auto no = run_json("tight --word 2:3,1:1,2:1");
  CHECK(no["tight"] == false);
  CHECK(no.contains("witness"));
  CHECK(no["q"].get<long long>() >= 0);
  CHECK(run_json("tight --word 1:1,2:2,1:2,2:1")["tight"] == true);
  CHECK(run_json("tight --word 1:1,2:2,1:1 --cartan kronecker")["tight"] == true);
  CHECK(run("tight --word 1:1,2").code == 2);
  CHECK(run("tight --word 1:0,2:1").code == 2);
  CHECK(run("tight --word 1:1,2:1 --cartan e8").code == 2);
}

TEST_CASE("seed sections") {
  const std::string good = "cli_section_good.json", bad = "cli_section_bad.json";
  std::ofstream(good) << R"({"n":3,"words":[{"matrix":")" << kA6 << R"(","word":"123^32"}]})";
  std::ofstream(bad) << R"({"n":3,"words":[{"matrix":")" << kA6 << R"(","word":"12^23^3"}]})";
  auto pinned = run_json("monomial --n 3 --matrix " + kA6 + " --seed-section " + good);
  CHECK(pinned["word"] == "123^32");
  CHECK(run_json("pbw --n 3 --matrix " + kA6 + " --seed-section " + good)["expansion_u"] ==
        run_json("pbw --n 3 --matrix " + kA6)["expansion_u"]);
  CHECK(run("pbw --n 3 --matrix " + kA6 + " --seed-section " + bad).code == 1);
  CHECK(run("pbw --n 3 --matrix " + kA6 + " --seed-section does_not_exist.json").code == 2);
  std::ofstream("cli_section_junk.json") << "{not json";
  CHECK(run("pbw --n 3 --matrix " + kA6 + " --seed-section cli_section_junk.json").code == 2);
}

TEST_CASE("output is deterministic") {
  for (const std::string args : {"hasse --n 3 --dim 1,2,3 --format dot", "canonical --n 3 --matrix 2.2.2,3.2.1",
                                 "enumerate --n 3 --dim 2,2,2"}) {
    CHECK(run(args).out == run(args).out);
  }
}
