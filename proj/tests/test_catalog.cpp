#include "doctest.h"
#include "platcfg/catalog.hpp"
#include "platcfg/symmetry.hpp"

#include <algorithm>

using namespace platcfg;

TEST_CASE("catalog is sorted with unique ids") {
  const auto& c = catalog();
  REQUIRE_FALSE(c.empty());
  for (size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].id < c[i].id);
  for (const auto& e : c) {
    CAPTURE(e.id);
    CHECK_FALSE(e.kinds.empty());
    CHECK_FALSE(e.headline.empty());
    for (auto k : e.kinds) CHECK(e.expected.count(k) == 1);
  }
}

TEST_CASE("lookup and solid resolution") {
  CHECK_THROWS_AS(find_entry("nosuch"), CatalogError);
  const auto& p = find_entry("pappus_faces");
  CHECK(resolve_kind(p, std::nullopt) == SolidKind::Tetrahedron);
  CHECK(admits(p, SolidKind::Icosahedron));
  CHECK_FALSE(admits(p, SolidKind::Cube));
  CHECK_THROWS_AS(build("pappus_faces", SolidKind::Cube), CatalogError);
  CHECK(kinds_text(p) == "T,O,I");
}

TEST_CASE("stated expectations") {
  CHECK(format_signature(*expected("f23_4", SolidKind::Octahedron).signature) == "(184_4)");
  auto m9 = expected("motif9_faces", SolidKind::Tetrahedron);
  CHECK(format_signature(*m9.signature) == "(36_3)");
  CHECK(m9.symmetry == SymmetryClass::RotationalOnly);
  CHECK(expected("a27_octa").symmetry == SymmetryClass::Neither);
  CHECK(expected("a27_cube").symmetry == SymmetryClass::Full);
  CHECK_FALSE(expected("grey_cube_cluster").connected);
  CHECK_FALSE(expected("ex6_p4n5").signature);
}

TEST_CASE("small builds") {
  auto p = build("pappus_faces", SolidKind::Tetrahedron);
  CHECK(format_signature(census(p)) == "(42_3)");
  CHECK(classify(p, SolidKind::Tetrahedron) == SymmetryClass::Full);
  CHECK(verify_axioms(p).passes());
  auto c = build("c3r_39", SolidKind::Cube);
  CHECK(format_signature(census(c)) == "(39_3)");
  CHECK(classify(c, SolidKind::Cube) == SymmetryClass::RotationalOnly);
  auto o = build("o4_pappus172");
  CHECK(format_signature(census(o)) == "(172_4)");
  CHECK(classify(o, SolidKind::Octahedron) == SymmetryClass::Full);
  CHECK(o.meta.solid == SolidKind::Octahedron);
  CHECK(o.meta.name == "o4_pappus172");
  CHECK(o.meta.layer_scales.size() == 2);
}

TEST_CASE("builds are deterministic") {
  auto a = build("d3r_270");
  auto b = build("d3r_270");
  REQUIRE(a.points.size() == b.points.size());
  for (size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].position == b.points[i].position);
  for (size_t i = 0; i < a.lines.size(); ++i) CHECK(a.lines[i].point_ids == b.lines[i].point_ids);
}

TEST_CASE("embedded motifs validate") {
  for (const auto& [name, text] : embedded_motifs()) {
    CAPTURE(name);
    CHECK_NOTHROW(load_motif(name));
  }
  CHECK_THROWS_AS(load_motif("nosuch"), CatalogError);
}
