#pragma once

#include "platcfg/incidence.hpp"
#include "platcfg/solids.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace platcfg {

struct Anchor {
  enum class Type { Vertex, Edge, Interior };
  Type type = Type::Interior;
  int index = 0;
  double t = 0;

  static Anchor vertex(int i) { return {Type::Vertex, i, 0}; }
  static Anchor edge(int i, double t) { return {Type::Edge, i, t}; }
  static Anchor interior() { return {}; }
  bool operator==(const Anchor&) const = default;
};

// Cyc: rotation by 2pi/m. Dih: rotation plus the mirror through corner 0.
// Mirror: the mirror through corner 0 alone.
enum class MotifSymmetry { Cyc, Dih, Mirror };

struct MotifPoint {
  Vec2 pos = Vec2::Zero();
  Anchor anchor;
  bool operator==(const MotifPoint&) const = default;
};

struct Motif {
  std::string name;
  int m = 3;
  std::vector<MotifPoint> points;
  std::vector<std::vector<int>> lines;
  MotifSymmetry symmetry = MotifSymmetry::Cyc;
};

Motif parse_motif(const std::string& text);
std::string format_motif(const Motif& motif);
std::vector<std::string> motif_problems(const Motif& motif, double eps = kEps);
void validate_motif(const Motif& motif, double eps = kEps);
// Per reference edge, the anchor parameters are invariant under t -> 1-t.
bool edge_anchors_symmetric(const Motif& motif, double eps = kEps);
std::vector<int> motif_valences(const Motif& motif);

struct CountSpec {
  int x = 0, y = 0, z = 0, u = 0, vv = 0;
};

std::pair<long, long> predict_counts(const SolidParams& params, const CountSpec& spec);
// Counts of a motif placed on a solid with regular faces: y from reference
// edge 0, x = 1 if corners are anchored.
CountSpec count_spec_of(const Motif& motif, bool edge_lines);

struct StagedPoint {
  Vec3 pos = Vec3::Zero();
  Provenance provenance = Provenance::FaceInterior;
  int layer = 0;
  int copy = 0;
};

struct StagedLine {
  std::vector<int> points;
  LineKind kind = LineKind::Motif;
};

struct RawAssembly {
  std::vector<StagedPoint> points;
  std::vector<StagedLine> lines;
  void append(const RawAssembly& other);
};

enum class CornerRule { FaceOrder, PolarVertex };

RawAssembly place_on_faces(const PlatonicSolid& solid, const Motif& motif, int layer, double scale,
                           CornerRule rule = CornerRule::FaceOrder, int copy_offset = 0);
GeometricConfiguration glue(const RawAssembly& raw, double eps = kEps);

struct PointSelector {
  std::optional<int> valence;
  std::optional<Provenance> provenance;
  bool matches(const ConfigPoint& p, int valence) const;
};

GeometricConfiguration add_edge_lines(const GeometricConfiguration& config, const PlatonicSolid& solid,
                                      double layer_scale, double eps = kEps);
GeometricConfiguration add_radial_lines(const GeometricConfiguration& config, const PointSelector& sel,
                                        bool include_center, double eps = kEps);
GeometricConfiguration add_antipodal_lines(const GeometricConfiguration& config, const PointSelector& sel,
                                           bool include_center, LineKind kind = LineKind::Antipodal,
                                           bool require_central_symmetry = true, double eps = kEps);

// Planar configuration drawn in the oblique frame of two axes a, b:
// a point (alpha, beta) embeds as alpha*a + beta*b.
struct AxisMotif {
  struct Point {
    Vec2 coef = Vec2::Zero();
    bool on_axis = false;
  };
  std::string name;
  std::vector<Point> points;
  std::vector<std::vector<int>> lines;
};

GeometricConfiguration place_on_axis_planes(const PlatonicSolid& solid, const AxisMotif& motif,
                                            const std::vector<std::pair<Vec3, Vec3>>& axis_pairs,
                                            double eps = kEps);
// Pairs of unit vertex directions joined by an edge of the solid.
std::vector<std::pair<Vec3, Vec3>> adjacent_vertex_axes(const PlatonicSolid& solid);
// One line per axis of the given order through the center and every point on it.
GeometricConfiguration add_axis_lines(const GeometricConfiguration& config, const PlatonicSolid& solid,
                                      int order, double eps = kEps);

// Per-edge motif of three lines through the edge midpoint (the edge itself and
// two tangent lines at angles +-theta), endpoints at distances a (on the edge)
// and b (tangent) towards each end, in units of the circumradius. Around each
// vertex the three edge copies are closed by three corner points.
struct HelicalEdgeParams {
  double theta = 0, a = 0, b = 0;
};

// Solves the vertex closure condition for every edge class of a trivalent
// polyhedron, starting from the given guesses (one per class, classes ordered
// by midpoint distance from the center, then by the sizes of the two faces).
std::vector<HelicalEdgeParams> solve_helical(const PlatonicSolid& trivalent,
                                             std::vector<HelicalEdgeParams> guess);
GeometricConfiguration helical_configuration(const PlatonicSolid& trivalent,
                                             const std::vector<HelicalEdgeParams>& params,
                                             double eps = kEps);

struct Augmentation {
  enum class Kind { EdgeLines, Radial, Antipodal };
  Kind kind = Kind::EdgeLines;
  PointSelector selector;
  bool include_center = false;
};

struct BuildPlan {
  std::string motif;
  Derivation derivation = Derivation::None;
  int layers = 1;
  CornerRule corner_rule = CornerRule::FaceOrder;
  std::vector<Augmentation> steps;
};

PlatonicSolid plan_solid(const BuildPlan& plan, SolidKind kind);
GeometricConfiguration run_plan(const BuildPlan& plan, SolidKind kind, const Motif& motif,
                                double eps = kEps);

}  // namespace platcfg
