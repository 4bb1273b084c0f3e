#include "doctest.h"
#include "platcfg/builder.hpp"
#include "platcfg/catalog.hpp"
#include "platcfg/document.hpp"
#include "platcfg/incidence.hpp"

#include <fstream>
#include <sstream>

using namespace platcfg;

namespace {

GeometricConfiguration figure1() {
  std::ifstream in(std::string(PLATCFG_FIXTURES) + "/figure1.json");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

GeometricConfiguration from_points(const std::vector<Vec3>& pts, const std::vector<std::vector<int>>& lines) {
  GeometricConfiguration c;
  for (size_t i = 0; i < pts.size(); ++i) c.points.push_back({int(i), pts[i]});
  for (size_t j = 0; j < lines.size(); ++j) {
    ConfigLine l;
    l.id = int(j);
    l.point_ids = lines[j];
    std::vector<Vec3> sup;
    for (int i : lines[j]) sup.push_back(pts[i]);
    std::tie(l.anchor, l.direction) = fit_line(sup);
    c.lines.push_back(l);
  }
  return c;
}

// Triangle with its three sides.
GeometricConfiguration triangle() {
  return from_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1}, {1, 2}, {2, 0}});
}

}  // namespace

TEST_CASE("census of the figure fixture") {
  auto c = figure1();
  CHECK(c.points.size() == 18);
  CHECK(c.lines.size() == 15);
  CHECK(format_signature(census(c)) == "(6_4 12_3, 15_4)");
}

TEST_CASE("census of catalog builds") {
  auto s = census(build("t3_barycentric42"));
  CHECK(format_signature(s) == "(42_3)");
  CHECK(s.balanced());
  CHECK(s.point_classes == std::vector<std::pair<int, int>>{{42, 3}});
  CHECK(s.line_classes == std::vector<std::pair<int, int>>{{42, 3}});
}

TEST_CASE("empty configuration") {
  auto s = census(GeometricConfiguration{});
  CHECK(s.point_classes.empty());
  CHECK(s.line_classes.empty());
  CHECK(format_signature(s) == "(,)");
}

TEST_CASE("signature text") {
  ValenceSignature s{{{6, 4}, {12, 3}}, {{15, 4}}};
  CHECK(format_signature(s) == "(6_4 12_3, 15_4)");
  CHECK(parse_signature("(6_4 12_3, 15_4)") == s);
  ValenceSignature b{{{39, 3}}, {{39, 3}}};
  CHECK(format_signature(b) == "(39_3)");
  CHECK(parse_signature("(39_3)") == b);
  CHECK(parse_signature("(39_3, 39_3)") == b);
  CHECK_FALSE(parse_signature("(39_)"));
  CHECK(s.point_incidences() == s.line_incidences());
  CHECK_FALSE(s.balanced());
}

TEST_CASE("axioms on a triangle") {
  auto r = verify_axioms(triangle());
  CHECK(r.passes());
  CHECK(r.max_residual < kEps);
  CHECK(is_connected(triangle()));
}

TEST_CASE("two lines through the same two points fail") {
  auto c = from_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
  auto r = verify_axioms(c);
  CHECK_FALSE(r.shared_pairs.empty());
  CHECK_FALSE(r.passes());
}

TEST_CASE("a point on a single line fails") {
  auto c = from_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 5, 1}}, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  auto r = verify_axioms(c);
  CHECK(r.underused_points == std::vector<int>{3});
  CHECK_FALSE(r.passes());
}

TEST_CASE("non-collinear line fails") {
  auto c = triangle();
  c.lines[0].point_ids = {0, 1, 2};
  c.lines.resize(1);
  auto r = verify_axioms(c);
  CHECK(r.max_residual > 0.1);
  CHECK_FALSE(r.passes());
}

TEST_CASE("bad point id is a structural error") {
  auto c = triangle();
  c.lines[0].point_ids = {0, 7};
  CHECK_FALSE(verify_axioms(c).errors.empty());
}

TEST_CASE("connectivity") {
  CHECK(is_connected(from_points({{0, 0, 0}, {1, 0, 0}}, {{0, 1}})));
  auto two = from_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 0, 0}, {6, 0, 0}, {5, 1, 0}},
                         {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(is_connected(two));
  auto solid = make_solid(SolidKind::Tetrahedron);
  auto staged = place_on_faces(solid, load_motif("pinwheel3"), 0, 1);
  GeometricConfiguration loose;
  for (size_t i = 0; i < staged.points.size(); ++i) loose.points.push_back({int(i), staged.points[i].pos});
  for (size_t j = 0; j < staged.lines.size(); ++j) loose.lines.push_back({int(j), staged.lines[j].points});
  CHECK_FALSE(is_connected(loose));
  CHECK(is_connected(glue(staged)));
}

TEST_CASE("levi graph") {
  auto z = build("pappus_faces", SolidKind::Tetrahedron);
  auto g = levi_graph(z);
  CHECK(g.edges.size() == 126);
  CHECK(g.point_vertices.size() == 42);
  CHECK(g.line_vertices.size() == 42);
  CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
}

TEST_CASE("canonicalize is idempotent") {
  auto z = build("c3r_39", SolidKind::Cube);
  auto once = canonicalize(z);
  auto twice = canonicalize(once);
  REQUIRE(once.points.size() == twice.points.size());
  for (size_t i = 0; i < once.points.size(); ++i) CHECK(once.points[i].position == twice.points[i].position);
  for (size_t i = 0; i < once.lines.size(); ++i) CHECK(once.lines[i].point_ids == twice.lines[i].point_ids);
}

TEST_CASE("line fit") {
  auto [a, d] = fit_line({{0, 0, 0}, {2, 2, 2}, {1, 1, 1}});
  CHECK(distance_to_line({3, 3, 3}, a, d) < 1e-12);
  CHECK(distance_to_line({1, 0, 0}, a, d) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK((canonical_direction(-d) - canonical_direction(d)).norm() < 1e-12);
}
