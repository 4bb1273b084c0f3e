#include "platcfg/catalog.hpp"

#include "platcfg/document.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace platcfg {

namespace {

using SK = SolidKind;
using SC = SymmetryClass;

ValenceSignature sig(const std::string& text) {
  auto s = parse_signature(text);
  if (!s) throw std::logic_error("bad catalog signature " + text);
  return *s;
}

Expectation expect(const std::string& signature, SC cls, std::optional<CountSpec> spec = std::nullopt,
                   bool connected = true) {
  Expectation e;
  if (!signature.empty()) e.signature = sig(signature);
  e.symmetry = cls;
  e.connected = connected;
  e.count_spec = spec;
  return e;
}

Expectation on_triangles(Expectation e) {
  e.count_solid = Derivation::Triangulated;
  return e;
}

Augmentation edge_lines() { return {Augmentation::Kind::EdgeLines, {}, false}; }

Augmentation radial(std::optional<int> valence, bool center = false) {
  Augmentation a;
  a.kind = Augmentation::Kind::Radial;
  a.selector.valence = valence;
  a.include_center = center;
  return a;
}

Augmentation antipodal(std::optional<int> valence, std::optional<Provenance> prov = std::nullopt,
                       bool center = false) {
  Augmentation a;
  a.kind = Augmentation::Kind::Antipodal;
  a.selector.valence = valence;
  a.selector.provenance = prov;
  a.include_center = center;
  return a;
}

GeometricConfiguration run(const BuildPlan& plan, SK kind, double eps) {
  return run_plan(plan, kind, load_motif(plan.motif), eps);
}

// Face motif builder: triangulates the faces of C and D when the motif is
// triangular.
std::function<GeometricConfiguration(SK, double)> faces(BuildPlan plan, bool triangulate_non_triangles = false) {
  return [plan, triangulate_non_triangles](SK kind, double eps) {
    BuildPlan p = plan;
    if (triangulate_non_triangles && table_params(kind).m != 3) p.derivation = Derivation::Triangulated;
    return run(p, kind, eps);
  };
}

BuildPlan plan(const std::string& motif, int layers, std::vector<Augmentation> steps = {},
               Derivation derivation = Derivation::None, CornerRule rule = CornerRule::FaceOrder) {
  BuildPlan p;
  p.motif = motif;
  p.layers = layers;
  p.steps = std::move(steps);
  p.derivation = derivation;
  p.corner_rule = rule;
  return p;
}

GeometricConfiguration grey_cluster(SK kind, double eps) {
  const GeometricConfiguration block = build("grey_cube_layers", kind, eps);
  const double offset = 10.37;
  RawAssembly raw;
  int copy = 0;
  for (int axis = 0; axis < 3; ++axis)
    for (double sign : {1.0, -1.0})
      for (double scale : {1.0, 0.8}) {
        RawAssembly part;
        Vec3 shift = Vec3::Zero();
        shift[axis] = sign * offset;
        for (const auto& p : block.points)
          part.points.push_back({scale * (p.position + shift), p.provenance, p.layer, copy});
        for (const auto& l : block.lines) part.lines.push_back({l.point_ids, l.kind});
        raw.append(part);
        ++copy;
      }
  GeometricConfiguration c = glue(raw, eps);
  c.meta.solid = kind;
  c.meta.layer_scales = block.meta.layer_scales;
  return add_antipodal_lines(c, {}, false, LineKind::Antipodal, true, eps);
}

// Planar web on the mirror plane spanned by two adjacent vertex axes, drawn
// in (u, w) with u along the 2-fold axis between them.
AxisMotif spiderweb_motif(const PlatonicSolid& solid) {
  auto [ai, aj] = adjacent_vertex_axes(solid).front();
  const double half = std::acos(std::clamp(ai.dot(aj), -1.0, 1.0)) / 2;
  const Vec2 dir_i(std::cos(half), std::sin(half));
  auto mirror = [](const Vec2& p) { return Vec2(p.x(), -p.y()); };
  auto meet_axis = [](const Vec2& p, const Vec2& q, const Vec2& d) {
    Eigen::Matrix2d m;
    m << (q - p).x(), -d.x(), (q - p).y(), -d.y();
    Vec2 st = m.colPivHouseholderQr().solve(-p);
    return Vec2(st[1] * d);
  };
  const double s = 0.3, w1 = 0.5, w3 = 0.35;
  const Vec2 p1(s, w1), p3(-s, w3);
  const Vec2 ai_pt = meet_axis(p1, p3, dir_i), bi_pt = meet_axis(p1, mirror(p3), dir_i);
  const std::vector<std::pair<Vec2, bool>> uw = {
      {p1, false},    {mirror(p1), false}, {p3, false},          {mirror(p3), false},
      {ai_pt, true},  {mirror(ai_pt), true}, {bi_pt, true},      {mirror(bi_pt), true},
      {{s, 0}, true}, {{-s, 0}, true}};
  Eigen::Matrix2d basis;
  basis.col(0) = dir_i;
  basis.col(1) = mirror(dir_i);
  AxisMotif m;
  m.name = "spiderweb";
  for (const auto& [q, on_axis] : uw) m.points.push_back({basis.inverse() * q, on_axis});
  m.lines = {{0, 2, 4}, {1, 3, 5}, {0, 3, 6}, {1, 2, 7}, {0, 1, 8}, {2, 3, 9}};
  return m;
}

GeometricConfiguration spiderweb(SK kind, double eps) {
  PlatonicSolid solid = make_solid(kind);
  GeometricConfiguration c = place_on_axis_planes(solid, spiderweb_motif(solid), adjacent_vertex_axes(solid), eps);
  c.meta.solid = kind;
  c.meta.layer_scales = {1.0};
  return add_axis_lines(c, solid, 2, eps);
}

std::vector<HelicalEdgeParams> helical_guess(SK kind) {
  switch (kind) {
    case SK::Tetrahedron: return {{-0.06112976, 0.72744816, 0.72880947}};
    case SK::Cube: return {{-0.18333942, 0.45740649, 0.46520313}};
    case SK::Dodecahedron: return {{0.16695555, 0.45070792, 0.45706327}};
    case SK::Octahedron:
    case SK::Icosahedron: return {{0.1, 0.2, 0.2}, {0.1, 0.2, 0.2}};
  }
  return {};
}

GeometricConfiguration helical(SK kind, double eps) {
  PlatonicSolid solid = truncate_to_trivalent(make_solid(kind));
  GeometricConfiguration c = helical_configuration(solid, solve_helical(solid, helical_guess(kind)), eps);
  c.meta.solid = kind;
  c.meta.layer_scales = {1.0};
  return c;
}

std::map<SK, Expectation> per_kind(std::initializer_list<std::pair<SK, Expectation>> items) {
  return {items.begin(), items.end()};
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  const CountSpec pappus_spec{0, 3, 6, 1, 9};
  const CountSpec motif9_spec{0, 3, 9, 1, 12};
  const CountSpec ex7_spec{0, 2, 12, 0, 15};
  const CountSpec a27_spec{0, 4, 28, 0, 27};

  c.push_back({"t3r_triangle48", {SK::Tetrahedron}, "(48_3)",
               "pinwheel triangle motif on three layers of the tetrahedron, rays through 2-valent points", false,
               per_kind({{SK::Tetrahedron, expect("(48_3)", SC::RotationalOnly)}}),
               faces(plan("pinwheel3", 3, {radial(2)}))});
  c.push_back({"t3_barycentric42", {SK::Tetrahedron}, "(42_3)",
               "medians of each face on three layers of the tetrahedron, rays through edge midpoints", false,
               per_kind({{SK::Tetrahedron, expect("(42_3)", SC::Full)}}),
               faces(plan("medians", 3, {radial(2)}))});
  c.push_back({"pappus_faces", {SK::Tetrahedron, SK::Octahedron, SK::Icosahedron}, "(7e_3)",
               "Pappus configuration in 3-fold form on every face, solid edges added", false,
               per_kind({{SK::Tetrahedron, expect("(42_3)", SC::Full, pappus_spec)},
                         {SK::Octahedron, expect("(84_3)", SC::Full, pappus_spec)},
                         {SK::Icosahedron, expect("(210_3)", SC::Full, pappus_spec)}}),
               faces(plan("pappus", 1, {edge_lines()}))});
  c.push_back({"d3_pentagram630", {SK::Dodecahedron}, "(630_3)",
               "pentagons split into five triangles, Pappus motif on each triangle, edges added", false,
               per_kind({{SK::Dodecahedron, on_triangles(expect("(630_3)", SC::Full, pappus_spec))}}),
               faces(plan("pappus", 1, {edge_lines()}, Derivation::Triangulated))});
  c.push_back({"d3r_270", {SK::Dodecahedron}, "(270_3)",
               "chiral pentagon motif (15_3 15_1, 20_3) on each face, edges added", false,
               per_kind({{SK::Dodecahedron, expect("(270_3)", SC::RotationalOnly, CountSpec{0, 3, 15, 1, 20})}}),
               faces(plan("pent270", 1, {edge_lines()}))});
  c.push_back({"grey_cube_layers", {SK::Cube}, "(112_3, 84_4)",
               "4x4 grid on each face of two concentric cubes, edges and antipodal lines added", false,
               per_kind({{SK::Cube, expect("(112_3, 84_4)", SC::Full)}}),
               faces(plan("grid4", 2, {edge_lines(), antipodal(2)}))});
  c.push_back({"grey_cube_cluster", {SK::Cube}, "(1344_4)",
               "twelve copies of grey_cube_layers on the coordinate axes, antipodal lines through all points",
               false, per_kind({{SK::Cube, expect("(1344_4)", SC::Full, std::nullopt, false)}}), grey_cluster});
  c.push_back({"c3r_39", {SK::Cube}, "(39_3)",
               "chiral square motif (4_3 1_2 4_1, 6_3) on each face, center joined to opposite face centers",
               false, per_kind({{SK::Cube, expect("(39_3)", SC::RotationalOnly)}}),
               faces(plan("pinwheel4", 1, {antipodal(2, Provenance::FaceInterior, true)}))});
  c.push_back({"motif9_faces",
               {SK::Tetrahedron, SK::Octahedron, SK::Icosahedron, SK::Cube, SK::Dodecahedron},
               "(9e_3)",
               "chiral triangle motif (9_3 9_1, 12_3) with three points per edge, edges added; cube and "
               "dodecahedron faces are triangulated",
               false,
               per_kind({{SK::Tetrahedron, expect("(36_3)", SC::RotationalOnly, motif9_spec)},
                         {SK::Octahedron, expect("(108_3)", SC::RotationalOnly, motif9_spec)},
                         {SK::Icosahedron, expect("(270_3)", SC::RotationalOnly, motif9_spec)},
                         {SK::Cube, on_triangles(expect("(324_3)", SC::RotationalOnly, motif9_spec))},
                         {SK::Dodecahedron, on_triangles(expect("(810_3)", SC::RotationalOnly, motif9_spec))}}),
               faces(plan("motif9", 1, {edge_lines()}), true)});
  c.push_back({"o4_pappus172", {SK::Octahedron}, "(172_4)",
               "triangle motif (3_1 6_2 7_3, 9_4) on two octahedra, antipodal lines through 3-valent points", false,
               per_kind({{SK::Octahedron, expect("(172_4)", SC::Full)}}),
               faces(plan("o4_pappus", 2, {antipodal(3)}))});
  c.push_back({"o4_alt252", {SK::Octahedron}, "(252_4)",
               "triangle motif (15_3 3_1, 12_4) on two octahedra, antipodal lines through 3-valent points", false,
               per_kind({{SK::Octahedron, expect("(252_4)", SC::Full)}}),
               faces(plan("o4_alt", 2, {antipodal(3)}))});
  c.push_back({"f23_4", {SK::Tetrahedron, SK::Octahedron, SK::Icosahedron}, "(23f_4)",
               "triangle motif with 4-valent lines on two layers, lines through the center join 3-valent points",
               false,
               per_kind({{SK::Tetrahedron, expect("(92_4)", SC::Full)},
                         {SK::Octahedron, expect("(184_4)", SC::Full)},
                         {SK::Icosahedron, expect("(460_4)", SC::Full)}}),
               faces(plan("f23", 2, {radial(3)}))});
  c.push_back({"rot21_octa", {SK::Octahedron}, "(48_4 96_3, 168_4)",
               "chiral triangle motif with 4-valent lines on each face of the octahedron", false,
               per_kind({{SK::Octahedron, expect("(48_4 96_3, 168_4)", SC::RotationalOnly)}}),
               faces(plan("rot21", 1))});
  c.push_back({"a27_octa", {SK::Octahedron}, "(224_3 48_4, 216_4)",
               "mirror-symmetric triangle motif with 4-valent lines, corner 0 on the polar vertex", false,
               per_kind({{SK::Octahedron, expect("(224_3 48_4, 216_4)", SC::Neither, a27_spec)}}),
               faces(plan("a27", 1, {}, Derivation::None, CornerRule::PolarVertex))});
  c.push_back({"a27_cube", {SK::Cube}, "(672_3 144_4, 648_4)",
               "a27 motif on the triangulated cube, corner 0 on the face center", false,
               per_kind({{SK::Cube, expect("(672_3 144_4, 648_4)", SC::Full, a27_spec)}}),
               faces(plan("a27", 1, {}, Derivation::Triangulated))});
  c.push_back({"ex6_p4n5", {SK::Tetrahedron}, "(p_4, n_5)",
               "triangle motif with 5-valent lines on five layers, edges and rays added", true,
               per_kind({{SK::Tetrahedron, expect("", SC::Full)}}),
               faces(plan("ex6", 5, {edge_lines(), radial(std::nullopt)}))});
  c.push_back({"ex7_triangulated",
               {SK::Tetrahedron, SK::Octahedron, SK::Icosahedron, SK::Cube, SK::Dodecahedron},
               "(15f_3)",
               "chiral triangle motif (12_3 3_2 3_1, 15_3) with paired edge points; cube and dodecahedron faces "
               "are triangulated",
               false,
               per_kind({{SK::Tetrahedron, expect("(60_3)", SC::RotationalOnly, ex7_spec)},
                         {SK::Octahedron, expect("(120_3)", SC::RotationalOnly, ex7_spec)},
                         {SK::Icosahedron, expect("(300_3)", SC::RotationalOnly, ex7_spec)},
                         {SK::Cube, on_triangles(expect("(360_3)", SC::RotationalOnly, ex7_spec))},
                         {SK::Dodecahedron, on_triangles(expect("(900_3)", SC::RotationalOnly, ex7_spec))}}),
               faces(plan("ex7", 1), true)});
  c.push_back({"spiderweb_t24", {SK::Tetrahedron}, "(24_3)",
               "webs on the six mirror planes of the tetrahedron, 2-fold axes as lines", false,
               per_kind({{SK::Tetrahedron, expect("(24_3)", SC::Full)}}), spiderweb});
  c.push_back({"helical",
               {SK::Tetrahedron, SK::Cube, SK::Dodecahedron, SK::Octahedron, SK::Icosahedron}, "(n_3)",
               "three lines through every edge midpoint closed by three points around each vertex; octahedron "
               "and icosahedron are truncated first",
               true,
               per_kind({{SK::Tetrahedron, expect("", SC::Full)},
                         {SK::Cube, expect("", SC::Full)},
                         {SK::Dodecahedron, expect("", SC::Full)},
                         {SK::Octahedron, expect("", SC::Full)},
                         {SK::Icosahedron, expect("", SC::Full)}}),
               helical});
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return c;
}

}  // namespace

Motif load_motif(const std::string& name) {
  const auto& all = embedded_motifs();
  auto it = all.find(name);
  if (it == all.end()) throw CatalogError("no motif named " + name);
  Motif m = parse_motif(it->second);
  validate_motif(m);
  return m;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& find_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw CatalogError("unknown catalog entry " + id);
}

bool admits(const CatalogEntry& entry, SolidKind kind) {
  return std::find(entry.kinds.begin(), entry.kinds.end(), kind) != entry.kinds.end();
}

SolidKind resolve_kind(const CatalogEntry& entry, std::optional<SolidKind> kind) {
  if (!kind) return entry.kinds.front();
  if (!admits(entry, *kind)) throw CatalogError(entry.id + " does not admit " + kind_name(*kind));
  return *kind;
}

GeometricConfiguration build(const std::string& id, std::optional<SolidKind> kind, double eps) {
  const CatalogEntry& e = find_entry(id);
  SolidKind k = resolve_kind(e, kind);
  GeometricConfiguration c = e.build(k, eps);
  c.meta.name = id;
  c.meta.solid = k;
  c.meta.provenance = e.source;
  c.meta.claimed_class = class_name(e.expected.at(k).symmetry);
  return quantized(c);
}

Expectation expected(const std::string& id, std::optional<SolidKind> kind) {
  const CatalogEntry& e = find_entry(id);
  return e.expected.at(resolve_kind(e, kind));
}

std::string kinds_text(const CatalogEntry& entry) {
  std::string out;
  for (auto k : entry.kinds) {
    if (!out.empty()) out += ",";
    out += kind_letter(k);
  }
  return out;
}

SolidParams count_params(SolidKind kind, const Expectation& exp) {
  switch (exp.count_solid) {
    case Derivation::Triangulated: return triangulate_faces(make_solid(kind)).params;
    case Derivation::Truncated: return truncate_to_trivalent(make_solid(kind)).params;
    case Derivation::None: break;
  }
  return table_params(kind);
}

std::optional<ValenceSignature> baseline(const std::string& id, SolidKind kind) {
  static const std::map<std::pair<std::string, SolidKind>, std::string> known = {
      {{"ex6_p4n5", SK::Tetrahedron}, "(350_4, 280_5)"},
      {{"helical", SK::Tetrahedron}, "(54_3)"},
      {{"helical", SK::Cube}, "(108_3)"},
      {{"helical", SK::Dodecahedron}, "(270_3)"}};
  auto it = known.find({id, kind});
  if (it == known.end()) return std::nullopt;
  return parse_signature(it->second);
}

}  // namespace platcfg
