#include "random_maps.hpp"

#include "cli.hpp"
#include "tropcheck/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace tropcheck;
using tropcheck::testing::fixture_path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze exit codes follow the verdict") {
  const Run e1 = run({"analyze", fixture_path("example1.trop")});
  CHECK(e1.code == cli::kExitIsomorphism);
  CHECK(e1.json()["verdict"] == "Isomorphism");
  CHECK(e1.json()["degree"] == 1);

  const Run e2 = run({"analyze", fixture_path("example2.trop")});
  CHECK(e2.code == cli::kExitNotIsomorphism);
  CHECK(e2.json()["witnesses"].size() == 2);
  CHECK(e2.json()["signs"]["pos"] == 8);

  const std::pair<const char*, int> expected[] = {{"identity.trop", 0}, {"example1.trop", 0}, {"example1-general.trop", 0},
                                                  {"g2d.trop", 1},      {"h3d.trop", 1},      {"example2.trop", 1}};
  for (const auto& [name, code] : expected) CHECK(run({"analyze", fixture_path(name)}).code == code);

  CHECK(run({"analyze", "/nonexistent/map.trop"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate", fixture_path("identity.trop")}).code == cli::kExitUsage);
}

TEST_CASE("reports are deterministic and seed controlled") {
  const Run a = run({"analyze", fixture_path("example2.trop")});
  const Run b = run({"analyze", fixture_path("example2.trop")});
  CHECK(a.out == b.out);
  const Run c = run({"--seed", "7", "analyze", fixture_path("example2.trop")});
  CHECK(c.json()["verdict"] == a.json()["verdict"]);
  CHECK(c.json()["regular_value"] != a.json()["regular_value"]);
  CHECK(run({"analyze", "--seed", "7", fixture_path("example2.trop")}).out == c.out);
}

TEST_CASE("pieces, eval, and preimage") {
  const Json pieces = run({"pieces", fixture_path("example1.trop")}).json();
  REQUIRE(pieces["count"] == 4);
  CHECK(pieces["pieces"][1]["matrix"] == Json::parse(R"([["1","2"],["0","1"]])"));
  CHECK(run({"pieces", fixture_path("identity.trop")}).json()["count"] == 1);
  for (const auto& p : run({"pieces", fixture_path("example2.trop")}).json()["pieces"]) CHECK(p["jac"] == "2");

  const Run ev = run({"eval", fixture_path("example2.trop"), "1,1,0"});
  CHECK(ev.code == 0);
  CHECK(ev.json()["value"] == Json::parse(R"(["1","3","1"])"));
  CHECK(run({"--format", "text", "eval", fixture_path("example2.trop"), "(-1,-1,8)"}).out == "(1, 3, 1)\n");
  CHECK(run({"eval", fixture_path("example2.trop"), "-1,-1,8"}).json()["value"] == Json::parse(R"(["1","3","1"])"));
  CHECK(run({"eval", fixture_path("example2.trop"), "1,1"}).code == cli::kExitUsage);

  const Json pre = run({"preimage", fixture_path("example2.trop"), "1,3,1"}).json();
  CHECK(pre["points"].size() == 2);

  const Run general = run({"--param", "beta=3", "analyze", fixture_path("example1-general.trop")});
  CHECK(general.code != cli::kExitUsage);
  CHECK(run({"--param", "nope=3", "analyze", fixture_path("example1-general.trop")}).code == cli::kExitUsage);
}

TEST_CASE("clarke and invert") {
  const Json c = run({"clarke", fixture_path("example1.trop"), "0,0"}).json();
  CHECK(c["verdict"] == "ContainsSingular");
  CHECK(c["witness"]["pieces"] == Json::parse("[2,3]"));
  CHECK(c["witness"]["weights"] == Json::parse(R"(["1/2","1/2"])"));

  const Json a = run({"analyze", fixture_path("example1.trop"), "--clarke-at", "0,0"}).json();
  CHECK(a["verdict"] == "Isomorphism");
  CHECK(a["clarke"]["verdict"] == "ContainsSingular");

  const Run inv = run({"invert", fixture_path("example1.trop")});
  CHECK(inv.code == 0);
  CHECK(inv.json()["count"] == 4);
  CHECK(run({"invert", fixture_path("example2.trop")}).code == cli::kExitNotIsomorphism);
}

TEST_CASE("plots") {
  const Run svg = run({"plot", fixture_path("example1.trop")});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
  std::size_t polygons = 0;
  for (auto pos = svg.out.find("<polygon"); pos != std::string::npos; pos = svg.out.find("<polygon", pos + 1)) ++polygons;
  CHECK(polygons == 4);

  const auto path = std::filesystem::temp_directory_path() / "tropcheck_identity.svg";
  CHECK(run({"--out", path.string(), "--viewport", "-1,1,-1,1", "plot", fixture_path("identity.trop")}).code == 0);
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);

  CHECK(run({"plot", fixture_path("example2.trop")}).code == cli::kExitUsage);
}

TEST_CASE("fixtures round-trip through the printer") {
  for (const char* name : {"identity.trop", "example1.trop", "example1-general.trop", "g2d.trop", "h3d.trop", "example2.trop"}) {
    const TropicalMap f = tropcheck::testing::load_fixture(name);
    CHECK(parse_map(print_map(f)) == f);
  }
}
