#include "doctest.h"
#include "platcfg/catalog.hpp"
#include "platcfg/document.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

using namespace platcfg;

TEST_CASE("json round trip is exact") {
  for (const char* id : {"pappus_faces", "c3r_39", "t3_barycentric42", "o4_alt252"}) {
    CAPTURE(id);
    auto z = build(id);
    std::string text = to_json(z);
    auto back = from_json(text);
    CHECK(to_json(back) == text);
    CHECK(verify_axioms(back).text() == verify_axioms(z).text());
    REQUIRE(back.points.size() == z.points.size());
    for (size_t i = 0; i < z.points.size(); ++i) CHECK(back.points[i].position == z.points[i].position);
  }
}

TEST_CASE("json layout") {
  auto j = nlohmann::json::parse(to_json(build("c3r_39")));
  CHECK(j["meta"]["solid"] == "cube");
  CHECK(j["points"].size() == 39);
  CHECK(j["lines"].size() == 39);
  CHECK(j["points"][0]["xyz"].size() == 3);
  CHECK(j["meta"]["claimed_class"] == "RotationalOnly");
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(from_json("{"), DocumentError);
  CHECK_THROWS_AS(from_json("[]"), DocumentError);
  std::string good = to_json(build("pappus_faces"));
  auto j = nlohmann::json::parse(good);
  auto broken = j;
  broken["lines"][0]["points"][0] = 100000;
  CHECK_THROWS_AS(from_json(broken.dump()), DocumentError);
  broken = j;
  broken["points"][0]["id"] = 7;
  CHECK_THROWS_AS(from_json(broken.dump()), DocumentError);
  broken = j;
  broken["points"][0]["provenance"] = "nowhere";
  CHECK_THROWS_AS(from_json(broken.dump()), DocumentError);
  broken = j;
  broken["meta"]["solid"] = "prism";
  CHECK_THROWS_AS(from_json(broken.dump()), DocumentError);
  CHECK_THROWS_AS(from_json(good.substr(0, good.size() / 2)), DocumentError);
}

TEST_CASE("exports") {
  auto z = build("pappus_faces");
  std::string levi = to_levi(z);
  CHECK(std::count(levi.begin(), levi.end(), '\n') == 126);
  std::string dot = to_dot(z);
  CHECK(dot.rfind("graph levi {", 0) == 0);
  CHECK(dot.find("p0 -- l") != std::string::npos);
  std::string obj = to_obj(z);
  size_t v = 0, l = 0;
  std::istringstream in(obj);
  for (std::string line; std::getline(in, line);) {
    v += line.rfind("v ", 0) == 0;
    l += line.rfind("l ", 0) == 0;
  }
  CHECK(v == 42);
  CHECK(l == 42);
}

TEST_CASE("quantized is idempotent") {
  auto z = quantized(build("d3r_270"));
  auto again = quantized(z);
  for (size_t i = 0; i < z.points.size(); ++i) CHECK(again.points[i].position == z.points[i].position);
}
