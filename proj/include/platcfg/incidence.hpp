#pragma once

#include "platcfg/solids.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace platcfg {

enum class Provenance { Vertex, EdgeInterior, FaceInterior, Axis, Center };
enum class LineKind { Motif, SolidEdge, Radial, Antipodal, AxisLine };

std::string provenance_name(Provenance p);
std::optional<Provenance> parse_provenance(const std::string& s);
std::string line_kind_name(LineKind k);
std::optional<LineKind> parse_line_kind(const std::string& s);

struct ConfigPoint {
  int id = 0;
  Vec3 position = Vec3::Zero();
  Provenance provenance = Provenance::FaceInterior;
  int layer = 0;  // -1 for the center
};

struct ConfigLine {
  int id = 0;
  std::vector<int> point_ids;
  LineKind kind = LineKind::Motif;
  Vec3 anchor = Vec3::Zero();
  Vec3 direction = Vec3::UnitX();
};

struct ConfigMeta {
  std::string name;
  std::optional<SolidKind> solid;
  std::vector<double> layer_scales;
  std::string provenance;
  std::string claimed_class;
};

struct GeometricConfiguration {
  std::vector<ConfigPoint> points;
  std::vector<ConfigLine> lines;
  ConfigMeta meta;
};

struct ValenceSignature {
  std::vector<std::pair<int, int>> point_classes;  // (count, valence), valence descending
  std::vector<std::pair<int, int>> line_classes;
  bool operator==(const ValenceSignature&) const = default;

  int point_count() const;
  int line_count() const;
  long point_incidences() const;
  long line_incidences() const;
  bool balanced() const;
};

ValenceSignature census(const GeometricConfiguration& config);
std::string format_signature(const ValenceSignature& sig);
std::optional<ValenceSignature> parse_signature(const std::string& text);

std::vector<int> point_valences(const GeometricConfiguration& config);

struct VerificationReport {
  double max_residual = 0;
  std::vector<std::pair<int, int>> shared_pairs;  // line pairs with >= 2 common points
  std::vector<int> underused_points;              // points on fewer than 2 lines
  std::vector<std::string> warnings;
  std::vector<std::string> errors;  // malformed structure (bad ids, duplicates)
  double eps = kEps;

  bool passes() const;
  std::string text() const;
};

VerificationReport verify_axioms(const GeometricConfiguration& config, double eps = kEps,
                                 double warn = 1e-6);

bool is_connected(const GeometricConfiguration& config);

struct LeviGraph {
  std::vector<int> point_vertices;
  std::vector<int> line_vertices;
  std::vector<std::pair<int, int>> edges;  // (point id, line id), sorted
};

LeviGraph levi_graph(const GeometricConfiguration& config);

// Least-squares support of a point set: centroid and unit direction with a
// canonical sign.
std::pair<Vec3, Vec3> fit_line(const std::vector<Vec3>& pts);
double distance_to_line(const Vec3& p, const Vec3& anchor, const Vec3& dir);
Vec3 canonical_direction(Vec3 d);

// Sorts points by (layer, provenance, quantized coordinates), orders the
// points of every line along its support and sorts lines; ids become dense.
GeometricConfiguration canonicalize(const GeometricConfiguration& config, double eps = kEps);

}  // namespace platcfg
