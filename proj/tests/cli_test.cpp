#include "ghg/cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ghg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string canonical_name(const nlohmann::json& g) {
  std::string name;
  const auto rank = g["rank"].get<int>();
  if (rank == 1) name = "Z";
  if (rank > 1) name = "Z^" + std::to_string(rank);
  for (const auto& d : g["factors"]) {
    if (!name.empty()) name += " + ";
    name += "Z/" + std::to_string(d.get<long>());
  }
  return name.empty() ? "0" : name;
}

}  // namespace

TEST_CASE("compute prints the gauge group") {
  const auto r = run({"compute", "--group", "SU2", "--base", "sphere:4", "--class", "6", "--degree", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "Z/6\n");
  CHECK(r.err.empty());
}

TEST_CASE("negative classes") {
  CHECK(run({"compute", "--group", "SU2", "--base", "sphere:4", "--class", "-8", "--degree", "2"}).out ==
        "Z/4\n");
  CHECK(run({"compute", "--group", "SU2", "--base", "sphere:4", "--class=-9", "--degree", "2"}).out ==
        "Z/3\n");
}

TEST_CASE("rational prints Q^d") {
  const auto r = run({"rational", "--group", "SU2", "--base", "surface:2", "--degree", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "Q^4\n");
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({"compute", "--group", "SU2", "--base", "sphere:4", "--class", "1", "--degree", "0"}).code == 1);
  CHECK(run({"compute", "--group", "SU2", "--base", "torus", "--class", "1", "--degree", "2"}).code == 1);
  CHECK(run({"compute", "--group", "G2", "--base", "sphere:4", "--class", "1", "--degree", "2"}).code == 1);
  CHECK(run({"compute", "--group", "SU2", "--base", "sphere:4", "--class", "x", "--degree", "2"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({}).code == 1);
  const auto r = run({"compute", "--group", "SU2", "--base", "sphere:4", "--class", "1", "--degree", "0"});
  CHECK(r.out.empty());
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("computation errors exit 2") {
  const auto missing =
      run({"compute", "--group", "SU3", "--base", "sphere:4", "--class", "1", "--degree", "4"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("Samelson") != std::string::npos);
  CHECK(run({"compute", "--group", "SU2", "--base", "sphere:4", "--class", "1", "--degree", "15"}).code == 2);
  CHECK(run({"compute", "--group", "SU2", "--base", "sphere:4", "--class", "1", "--degree", "2",
             "--catalog", "/nonexistent.json"})
            .code == 2);
}

TEST_CASE("json and text agree") {
  for (const char* k : {"0", "1", "4", "6", "-7"}) {
    std::vector<std::string> args{"compute", "--group", "SU2", "--base", "sphere:4", "--class", k,
                                  "--degree", "2"};
    const auto text = run(args);
    args.insert(args.end(), {"--format", "json"});
    const auto json = run(args);
    REQUIRE(json.code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["kind"] == "resolved");
    CHECK(canonical_name(doc) + "\n" == text.out);
    CHECK(doc["name"].get<std::string>() + "\n" == text.out);
  }
  const auto rational =
      nlohmann::json::parse(run({"rational", "--group", "SU3", "--base", "sphere:4", "--degree", "5",
                                 "--format", "json"})
                                .out);
  CHECK(rational["dimension"] == 1);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"compute", "--group", "TEST", "--base", "surface:1", "--class", "1",
                                      "--degree", "1", "--format", "json"};
  const auto first = run(args);
  CHECK(first.code == 0);
  for (int i = 0; i < 3; ++i) CHECK(run(args).out == first.out);
  CHECK(run({"catalog"}).out == run({"catalog"}).out);
}

TEST_CASE("catalog listing") {
  const auto r = run({"catalog"});
  CHECK(r.code == 0);
  CHECK(r.out.find("SU2: table depth 16") != std::string::npos);
  const auto doc = nlohmann::json::parse(run({"catalog", "--format", "json"}).out);
  CHECK(doc.size() == 4);
}

TEST_CASE("catalog from the environment") {
  setenv("GHG_CATALOG", "/nonexistent.json", 1);
  CHECK(run({"catalog"}).code == 2);
  CHECK(run({"catalog", "--catalog", GHG_DEFAULT_CATALOG}).code == 0);
  unsetenv("GHG_CATALOG");
  CHECK(run({"catalog"}).code == 0);
}

TEST_CASE("verify passes on the shipped catalog") {
  const auto r = run({"verify", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["failed"] == 0);
  CHECK(doc["checks"].size() == doc["passed"]);
}
