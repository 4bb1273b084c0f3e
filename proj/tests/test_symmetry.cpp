#include "doctest.h"
#include "platcfg/catalog.hpp"
#include "platcfg/symmetry.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace platcfg;

namespace {

int vertex_image(const PlatonicSolid& s, const Isometry& g, int i) {
  for (size_t j = 0; j < s.vertices.size(); ++j)
    if ((g(s.vertices[i]) - s.vertices[j]).norm() < 1e-9) return int(j);
  return -1;
}

int parity(std::vector<int> perm) {
  int sign = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    while (perm[i] != int(i)) {
      std::swap(perm[i], perm[perm[i]]);
      sign = -sign;
    }
  return sign;
}

bool same_configuration(const GeometricConfiguration& a, const GeometricConfiguration& b) {
  if (a.points.size() != b.points.size() || a.lines.size() != b.lines.size()) return false;
  for (size_t i = 0; i < a.points.size(); ++i)
    if ((a.points[i].position - b.points[i].position).norm() > 1e-9) return false;
  for (size_t i = 0; i < a.lines.size(); ++i)
    if (a.lines[i].point_ids != b.lines[i].point_ids) return false;
  return true;
}

}  // namespace

TEST_CASE("group orders") {
  const std::map<SolidKind, size_t> order = {{SolidKind::Tetrahedron, 12}, {SolidKind::Cube, 24},
                                             {SolidKind::Octahedron, 24}, {SolidKind::Dodecahedron, 60},
                                             {SolidKind::Icosahedron, 60}};
  for (auto k : kAllKinds) {
    CAPTURE(kind_name(k));
    auto rot = rotation_group(k);
    auto full = full_group(k);
    CHECK(rot.order() == order.at(k));
    CHECK(full.order() == 2 * order.at(k));
    for (const auto& g : rot.elements) CHECK(g.det_sign == 1);
    int improper = 0;
    for (const auto& g : full.elements) improper += g.det_sign < 0;
    CHECK(improper == int(order.at(k)));
  }
}

TEST_CASE("groups map the solid onto itself and are closed") {
  for (auto k : kAllKinds) {
    auto s = make_solid(k);
    auto full = full_group(k);
    for (const auto& g : full.elements) {
      CHECK((g.matrix * g.matrix.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-9);
      for (int i = 0; i < s.params.v; ++i) CHECK(vertex_image(s, g, i) >= 0);
    }
    auto rot = rotation_group(k);
    for (const auto& a : rot.elements)
      for (const auto& b : rot.elements) CHECK(rot.contains(a.matrix * b.matrix));
  }
}

TEST_CASE("tetrahedral rotations act as the even vertex permutations") {
  auto s = make_solid(SolidKind::Tetrahedron);
  std::set<std::vector<int>> perms;
  for (const auto& g : rotation_group(SolidKind::Tetrahedron).elements) {
    std::vector<int> p;
    for (int i = 0; i < 4; ++i) p.push_back(vertex_image(s, g, i));
    CHECK(parity(p) == 1);
    perms.insert(p);
  }
  CHECK(perms.size() == 12);
}

TEST_CASE("central inversion") {
  Mat3 minus = -Mat3::Identity();
  CHECK_FALSE(full_group(SolidKind::Tetrahedron).contains(minus));
  for (auto k : {SolidKind::Cube, SolidKind::Octahedron, SolidKind::Dodecahedron, SolidKind::Icosahedron})
    CHECK(full_group(k).contains(minus));
}

TEST_CASE("orbits of a vertex") {
  for (auto k : kAllKinds) {
    auto s = make_solid(k);
    CHECK(int(rotation_group(k).orbit(s.vertices[0]).size()) == s.params.v);
  }
}

TEST_CASE("closure of a runaway generator set throws") {
  CHECK_THROWS(close_group({rotation_about(Vec3::UnitZ(), 1.0)}, 1e-9, 50));
}

TEST_CASE("apply") {
  auto z = build("pappus_faces", SolidKind::Octahedron);
  CHECK(same_configuration(apply(Isometry{}, z), z));
  auto g = rotation_group(SolidKind::Octahedron).elements[5];
  auto inv = Isometry::from(g.matrix.transpose());
  auto back = apply(g, apply(inv, z));
  for (size_t i = 0; i < z.points.size(); ++i) CHECK((back.points[i].position - z.points[i].position).norm() < 1e-9);
}

TEST_CASE("a rotation that is not in the group breaks invariance") {
  auto z = build("pappus_faces", SolidKind::Octahedron);
  CHECK_FALSE(is_invariant(z, Isometry::from(rotation_about(Vec3(1, 2, 3), 0.3))));
  CHECK(is_invariant(z, rotation_group(SolidKind::Octahedron)));
}

TEST_CASE("classification") {
  CHECK(classify(build("pappus_faces", SolidKind::Octahedron), SolidKind::Octahedron) == SymmetryClass::Full);
  CHECK(classify(build("c3r_39", SolidKind::Cube), SolidKind::Cube) == SymmetryClass::RotationalOnly);
  CHECK(classify(build("t3_barycentric42"), SolidKind::Tetrahedron) == SymmetryClass::Full);
  CHECK(classify(build("a27_octa"), SolidKind::Octahedron) == SymmetryClass::Neither);
}

TEST_CASE("a perturbed point breaks invariance") {
  auto z = build("pappus_faces", SolidKind::Tetrahedron);
  z.points[3].position += Vec3(1e-4, 0, 0);
  CHECK(classify(z, SolidKind::Tetrahedron) == SymmetryClass::Neither);
}

TEST_CASE("class names") {
  for (auto c : {SymmetryClass::Full, SymmetryClass::RotationalOnly, SymmetryClass::Neither})
    CHECK(parse_class(class_name(c)) == c);
  CHECK_FALSE(parse_class("Chiral"));
}
