#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace platcfg {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kEps = 1e-9;

enum class SolidKind { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

inline constexpr std::array<SolidKind, 5> kAllKinds = {
    SolidKind::Tetrahedron, SolidKind::Cube, SolidKind::Octahedron,
    SolidKind::Dodecahedron, SolidKind::Icosahedron};

struct SolidParams {
  int v = 0, e = 0, f = 0, d = 0, m = 0;
  bool operator==(const SolidParams&) const = default;
};

// Which stratum of the underlying Platonic solid a vertex or edge of a
// (possibly derived) polyhedron belongs to.
enum class Stratum { Vertex, Edge, Face };

enum class Derivation { None, Triangulated, Truncated };

struct Axis {
  Vec3 dir;
  int order = 0;
};

struct PlatonicSolid {
  SolidKind kind = SolidKind::Tetrahedron;
  SolidParams params;
  Derivation derivation = Derivation::None;
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> faces;  // counter-clockwise seen from outside
  std::vector<Axis> axes;
  Vec3 center = Vec3::Zero();
  std::vector<Stratum> vertex_stratum;
  std::vector<Stratum> edge_stratum;

  double circumradius() const;
  int edge_index(int a, int b) const;  // -1 if absent
};

struct LayerSpec {
  std::vector<double> scales;
  static LayerSpec geometric(int count, double ratio = 0.8);
  void validate() const;
};

// Affine map taking the reference m-gon (circumradius 1, corner i at angle
// 2*pi*i/m) onto a face.
struct FaceFrame {
  Eigen::Matrix<double, 3, 2> linear;
  Vec3 offset;
  Vec3 operator()(const Vec2& p) const { return linear * p + offset; }
};

SolidParams table_params(SolidKind kind);
PlatonicSolid make_solid(SolidKind kind);
PlatonicSolid scale_solid(const PlatonicSolid& solid, double factor);
FaceFrame face_frame(const PlatonicSolid& solid, int face_index, double layer_scale,
                     int first_corner = 0);
PlatonicSolid truncate_to_trivalent(const PlatonicSolid& solid);
PlatonicSolid triangulate_faces(const PlatonicSolid& solid);

Vec2 reference_corner(int m, int i);

std::string kind_name(SolidKind kind);
char kind_letter(SolidKind kind);
std::optional<SolidKind> parse_kind(std::string_view text);

}  // namespace platcfg
