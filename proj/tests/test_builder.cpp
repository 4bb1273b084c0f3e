#include "doctest.h"
#include "fuzz.hpp"
#include "platcfg/builder.hpp"
#include "platcfg/catalog.hpp"

#include <numeric>

using namespace platcfg;

namespace {

int count_kind(const GeometricConfiguration& c, LineKind kind, size_t size) {
  int n = 0;
  for (const auto& l : c.lines) n += l.kind == kind && l.point_ids.size() == size;
  return n;
}

Motif symmetric_edge_motif() {
  // three anchors per side at 1/4, 1/2, 3/4 with the interior center on three spokes
  Motif m;
  m.name = "spokes";
  for (int k = 0; k < 3; ++k)
    for (double t : {0.25, 0.5, 0.75})
      m.points.push_back({(1 - t) * reference_corner(3, k) + t * reference_corner(3, (k + 1) % 3), Anchor::edge(k, t)});
  m.points.push_back({Vec2::Zero(), Anchor::interior()});
  m.lines = {{1, 9}, {4, 9}, {7, 9}};
  return m;
}

}  // namespace

TEST_CASE("proposition counts") {
  auto t = table_params(SolidKind::Tetrahedron);
  CHECK(predict_counts(t, {0, 3, 6, 1, 9}) == std::pair<long, long>{42, 42});
  auto d = table_params(SolidKind::Dodecahedron);
  CHECK(predict_counts(d, {0, 3, 15, 1, 20}) == std::pair<long, long>{270, 270});
  auto o = table_params(SolidKind::Octahedron);
  CHECK(predict_counts(o, {1, 2, 7, 0, 9}) == std::pair<long, long>{86, 72});
  for (auto k : kAllKinds) CHECK(predict_counts(table_params(k), {}) == std::pair<long, long>{0, 0});
}

TEST_CASE("motif text round trip") {
  for (const auto& [name, text] : embedded_motifs()) {
    CAPTURE(name);
    auto m = parse_motif(text);
    CHECK(motif_problems(m).empty());
    auto again = parse_motif(format_motif(m));
    CHECK(again.points == m.points);
    CHECK(again.lines == m.lines);
    CHECK(again.symmetry == m.symmetry);
  }
  CHECK_THROWS(parse_motif("pt 0 0 anchor=interior\n"));
  CHECK_THROWS(parse_motif("motif x m=3 sym=cyc\npt 0 zero anchor=interior\n"));
}

TEST_CASE("motif problems are reported") {
  auto m = symmetric_edge_motif();
  CHECK(motif_problems(m).empty());
  m.points[0].pos += Vec2(0.01, 0);
  CHECK_FALSE(motif_problems(m).empty());
  auto dup = symmetric_edge_motif();
  dup.lines.push_back({1, 9});
  CHECK_FALSE(motif_problems(dup).empty());
  CHECK(edge_anchors_symmetric(symmetric_edge_motif()));
}

TEST_CASE("one copy per face") {
  auto pinwheel = load_motif("pinwheel3");
  auto raw = place_on_faces(make_solid(SolidKind::Tetrahedron), pinwheel, 0, 1);
  CHECK(raw.points.size() == 4 * pinwheel.points.size());
  auto pappus = load_motif("pappus");
  auto o = place_on_faces(make_solid(SolidKind::Octahedron), pappus, 0, 1);
  CHECK(o.lines.size() == 72);
  for (const auto& p : o.points) CHECK(p.provenance != Provenance::Vertex);
  CHECK_THROWS(place_on_faces(make_solid(SolidKind::Cube), pappus, 0, 1));
}

TEST_CASE("gluing merges shared edge anchors") {
  auto solid = make_solid(SolidKind::Tetrahedron);
  auto raw = place_on_faces(solid, symmetric_edge_motif(), 0, 1);
  CHECK(raw.points.size() == 40);
  auto z = glue(raw);
  int edge_points = 0;
  for (const auto& p : z.points) edge_points += p.provenance == Provenance::EdgeInterior;
  CHECK(edge_points == 18);
  CHECK(z.points.size() == 22);
}

TEST_CASE("edge lines") {
  auto solid = make_solid(SolidKind::Tetrahedron);
  auto z = add_edge_lines(glue(place_on_faces(solid, symmetric_edge_motif(), 0, 1)), solid, 1);
  CHECK(count_kind(z, LineKind::SolidEdge, 3) == 6);
  auto bare = glue(place_on_faces(solid, load_motif("medians"), 0, 1));
  bare.points.clear();
  bare.lines.clear();
  CHECK_THROWS(add_edge_lines(bare, solid, 1));
}

TEST_CASE("radial lines") {
  CHECK(count_kind(build("t3r_triangle48"), LineKind::Radial, 3) == 12);
  CHECK(count_kind(build("t3_barycentric42"), LineKind::Radial, 3) == 6);
  auto one = glue(place_on_faces(make_solid(SolidKind::Tetrahedron), load_motif("medians"), 0, 1));
  CHECK_THROWS(add_radial_lines(one, {2, std::nullopt}, false));
}

TEST_CASE("antipodal lines") {
  CHECK(count_kind(build("o4_pappus172"), LineKind::Antipodal, 4) == 28);
  auto c = build("c3r_39");
  CHECK(count_kind(c, LineKind::Antipodal, 3) == 3);
  int centers = 0;
  for (const auto& p : c.points) centers += p.provenance == Provenance::Center;
  CHECK(centers == 1);
  auto t = build("pappus_faces", SolidKind::Tetrahedron);
  CHECK_THROWS(add_antipodal_lines(t, {}, false));
}

TEST_CASE("axis planes") {
  auto solid = make_solid(SolidKind::Tetrahedron);
  AxisMotif m;
  m.points = {{{0.3, 0.2}}, {{0.2, 0.3}}};
  m.lines = {{0, 1}};
  auto empty = place_on_axis_planes(solid, m, {});
  CHECK(empty.points.empty());
  CHECK(empty.lines.empty());
  CHECK(adjacent_vertex_axes(solid).size() == 6);
}

TEST_CASE("helical closure") {
  auto t = make_solid(SolidKind::Tetrahedron);
  auto params = solve_helical(t, {{-0.06, 0.73, 0.73}});
  auto z = helical_configuration(t, params);
  auto r = verify_axioms(z);
  CHECK(r.passes());
  auto s = census(z);
  CHECK(s.balanced());
  CHECK(s.point_classes.front().second == 3);
  CHECK_THROWS(solve_helical(t, {}));
  CHECK_THROWS(solve_helical(make_solid(SolidKind::Octahedron), {{0, 0.5, 0.5}}));
}

TEST_CASE("count spec of a motif") {
  auto s = count_spec_of(load_motif("pappus"), true);
  CHECK(s.x == 0);
  CHECK(s.y == 3);
  CHECK(s.z == 6);
  CHECK(s.u == 1);
  CHECK(s.vv == 9);
}

TEST_CASE("randomized placements keep the incidence count identity") {
  std::mt19937 rng(20240611);
  const SolidKind kinds[] = {SolidKind::Tetrahedron, SolidKind::Cube, SolidKind::Octahedron,
                             SolidKind::Dodecahedron, SolidKind::Icosahedron};
  for (int trial = 0; trial < 100; ++trial) {
    SolidKind kind = kinds[trial % 5];
    auto solid = make_solid(kind);
    auto motif = testing::random_motif(solid.params.m, rng);
    REQUIRE(motif_problems(motif).empty());
    REQUIRE(edge_anchors_symmetric(motif));
    auto z = add_edge_lines(glue(place_on_faces(solid, motif, 0, 1)), solid, 1);
    auto val = point_valences(z);
    long pv = std::accumulate(val.begin(), val.end(), 0L);
    long lv = 0;
    for (const auto& l : z.lines) lv += long(l.point_ids.size());
    auto s = census(z);
    CHECK(pv == lv);
    CHECK(pv == long(levi_graph(z).edges.size()));
    CHECK(s.point_incidences() == s.line_incidences());
    CHECK(verify_axioms(z).max_residual <= kEps);
    auto [p, l] = predict_counts(solid.params, count_spec_of(motif, true));
    CHECK(p == long(z.points.size()));
    CHECK(l == long(z.lines.size()));
  }
}
