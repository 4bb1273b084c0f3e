#include "platcfg/solids.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace platcfg {

namespace {

const double kPhi = std::numbers::phi;

std::vector<Vec3> raw_vertices(SolidKind kind) {
  std::vector<Vec3> out;
  switch (kind) {
    case SolidKind::Tetrahedron:
      for (int sx : {1, -1})
        for (int sy : {1, -1})
          for (int sz : {1, -1})
            if (sx * sy * sz > 0) out.emplace_back(sx, sy, sz);
      break;
    case SolidKind::Cube:
      for (int sx : {1, -1})
        for (int sy : {1, -1})
          for (int sz : {1, -1}) out.emplace_back(sx, sy, sz);
      break;
    case SolidKind::Octahedron:
      for (int axis = 0; axis < 3; ++axis)
        for (int s : {1, -1}) {
          Vec3 p = Vec3::Zero();
          p[axis] = s;
          out.push_back(p);
        }
      break;
    case SolidKind::Icosahedron:
      for (int c = 0; c < 3; ++c)
        for (int s1 : {1, -1})
          for (int s2 : {1, -1}) {
            Vec3 p;
            p[c] = 0;
            p[(c + 1) % 3] = s1;
            p[(c + 2) % 3] = s2 * kPhi;
            out.push_back(p);
          }
      break;
    case SolidKind::Dodecahedron:
      for (int sx : {1, -1})
        for (int sy : {1, -1})
          for (int sz : {1, -1}) out.emplace_back(sx, sy, sz);
      for (int c = 0; c < 3; ++c)
        for (int s1 : {1, -1})
          for (int s2 : {1, -1}) {
            Vec3 p;
            p[c] = 0;
            p[(c + 1) % 3] = s1 / kPhi;
            p[(c + 2) % 3] = s2 * kPhi;
            out.push_back(p);
          }
      break;
  }
  for (auto& p : out) p.normalize();
  return out;
}

std::vector<std::array<int, 2>> shortest_edges(const std::vector<Vec3>& vs) {
  double best = 1e300;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) best = std::min(best, (vs[i] - vs[j]).norm());
  std::vector<std::array<int, 2>> out;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if ((vs[i] - vs[j]).norm() < best + 1e-7) out.push_back({int(i), int(j)});
  return out;
}

// Supporting planes of the convex hull, each face ordered counter-clockwise
// about its outward normal.
std::vector<std::vector<int>> hull_faces(const std::vector<Vec3>& vs) {
  const int n = int(vs.size());
  std::vector<std::vector<int>> faces;
  std::vector<Vec3> normals;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec3 nrm = (vs[b] - vs[a]).cross(vs[c] - vs[a]);
        if (nrm.norm() < 1e-9) continue;
        nrm.normalize();
        double off = nrm.dot(vs[a]);
        if (off < 0) {
          nrm = -nrm;
          off = -off;
        }
        bool support = true;
        std::vector<int> on;
        for (int k = 0; k < n; ++k) {
          double s = nrm.dot(vs[k]) - off;
          if (s > 1e-7) {
            support = false;
            break;
          }
          if (std::abs(s) <= 1e-7) on.push_back(k);
        }
        if (!support) continue;
        bool seen = false;
        for (const auto& q : normals)
          if ((q - nrm).norm() < 1e-7) seen = true;
        if (seen) continue;
        normals.push_back(nrm);
        Vec3 c0 = Vec3::Zero();
        for (int k : on) c0 += vs[k];
        c0 /= double(on.size());
        Vec3 u = (vs[on[0]] - c0).normalized();
        Vec3 w = nrm.cross(u);
        std::sort(on.begin(), on.end(), [&](int i, int j) {
          auto ang = [&](int k) {
            double t = std::atan2((vs[k] - c0).dot(w), (vs[k] - c0).dot(u));
            return t < -1e-12 ? t + 2 * std::numbers::pi : t;
          };
          return ang(i) < ang(j);
        });
        faces.push_back(on);
      }
  // rotate so that each face starts with its smallest vertex index, then sort
  for (auto& f : faces) std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
  std::sort(faces.begin(), faces.end());
  return faces;
}

void add_axis(std::vector<Axis>& axes, Vec3 dir, int order) {
  dir.normalize();
  for (const auto& a : axes)
    if ((a.dir - dir).norm() < 1e-7 || (a.dir + dir).norm() < 1e-7) return;
  // canonical sign: first clearly non-zero coordinate positive
  for (int i = 0; i < 3; ++i) {
    if (std::abs(dir[i]) > 1e-9) {
      if (dir[i] < 0) dir = -dir;
      break;
    }
  }
  axes.push_back({dir, order});
}

std::vector<Axis> solid_axes(const PlatonicSolid& s) {
  std::vector<Axis> axes;
  for (const auto& f : s.faces) {
    Vec3 c = Vec3::Zero();
    for (int k : f) c += s.vertices[k];
    add_axis(axes, c, int(f.size()));
  }
  for (const auto& v : s.vertices) add_axis(axes, v, s.params.d);
  for (const auto& e : s.edges) add_axis(axes, s.vertices[e[0]] + s.vertices[e[1]], 2);
  return axes;
}

}  // namespace

double PlatonicSolid::circumradius() const {
  double r = 0;
  for (const auto& p : vertices) r = std::max(r, (p - center).norm());
  return r;
}

int PlatonicSolid::edge_index(int a, int b) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if ((edges[i][0] == a && edges[i][1] == b) || (edges[i][0] == b && edges[i][1] == a))
      return int(i);
  return -1;
}

LayerSpec LayerSpec::geometric(int count, double ratio) {
  LayerSpec out;
  double s = 1.0;
  for (int i = 0; i < count; ++i) {
    out.scales.push_back(s);
    s *= ratio;
  }
  return out;
}

void LayerSpec::validate() const {
  if (scales.empty()) throw std::invalid_argument("layer spec needs at least one scale");
  for (size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0)) throw std::invalid_argument("layer scales must be positive");
    if (i > 0 && !(scales[i] < scales[i - 1]))
      throw std::invalid_argument("layer scales must be strictly decreasing");
  }
}

SolidParams table_params(SolidKind kind) {
  switch (kind) {
    case SolidKind::Tetrahedron: return {4, 6, 4, 3, 3};
    case SolidKind::Cube: return {8, 12, 6, 3, 4};
    case SolidKind::Octahedron: return {6, 12, 8, 4, 3};
    case SolidKind::Dodecahedron: return {20, 30, 12, 3, 5};
    case SolidKind::Icosahedron: return {12, 30, 20, 5, 3};
  }
  return {};
}

PlatonicSolid make_solid(SolidKind kind) {
  PlatonicSolid s;
  s.kind = kind;
  s.params = table_params(kind);
  s.vertices = raw_vertices(kind);
  s.edges = shortest_edges(s.vertices);
  s.faces = hull_faces(s.vertices);
  s.axes = solid_axes(s);
  s.vertex_stratum.assign(s.vertices.size(), Stratum::Vertex);
  s.edge_stratum.assign(s.edges.size(), Stratum::Edge);
  return s;
}

PlatonicSolid scale_solid(const PlatonicSolid& solid, double factor) {
  if (!(factor > 0)) throw std::invalid_argument("scale factor must be positive");
  PlatonicSolid out = solid;
  for (auto& p : out.vertices) p = solid.center + factor * (p - solid.center);
  return out;
}

Vec2 reference_corner(int m, int i) {
  double a = 2 * std::numbers::pi * double(i) / double(m);
  return {std::cos(a), std::sin(a)};
}

FaceFrame face_frame(const PlatonicSolid& solid, int face_index, double layer_scale,
                     int first_corner) {
  if (face_index < 0 || face_index >= int(solid.faces.size()))
    throw std::out_of_range("face index out of range");
  const auto& f = solid.faces[face_index];
  const int m = int(f.size());
  auto w = [&](int i) {
    return Vec3(solid.center + layer_scale * (solid.vertices[f[(i + first_corner) % m]] - solid.center));
  };
  Eigen::Matrix2d r;
  r.col(0) = reference_corner(m, 1) - reference_corner(m, 0);
  r.col(1) = reference_corner(m, 2) - reference_corner(m, 0);
  Eigen::Matrix<double, 3, 2> wm;
  wm.col(0) = w(1) - w(0);
  wm.col(1) = w(2) - w(0);
  FaceFrame fr;
  fr.linear = wm * r.inverse();
  fr.offset = w(0) - fr.linear * reference_corner(m, 0);
  return fr;
}

PlatonicSolid truncate_to_trivalent(const PlatonicSolid& solid) {
  if (solid.params.d == 3 || solid.derivation != Derivation::None) return solid;
  PlatonicSolid out;
  out.kind = solid.kind;
  out.derivation = Derivation::Truncated;
  out.center = solid.center;
  // vertex (a -> b) sits on edge ab at one third from a
  std::map<std::pair<int, int>, int> id;
  for (const auto& e : solid.edges)
    for (int dir = 0; dir < 2; ++dir) {
      int a = e[dir], b = e[1 - dir];
      id[{a, b}] = int(out.vertices.size());
      out.vertices.push_back(solid.vertices[a] + (solid.vertices[b] - solid.vertices[a]) / 3.0);
    }
  out.faces = hull_faces(out.vertices);
  out.edges = shortest_edges(out.vertices);
  out.vertex_stratum.assign(out.vertices.size(), Stratum::Edge);
  out.edge_stratum.assign(out.edges.size(), Stratum::Edge);
  out.params = {int(out.vertices.size()), int(out.edges.size()), int(out.faces.size()), 3, 0};
  out.axes = solid.axes;
  return out;
}

PlatonicSolid triangulate_faces(const PlatonicSolid& solid) {
  PlatonicSolid out;
  out.kind = solid.kind;
  out.derivation = Derivation::Triangulated;
  out.center = solid.center;
  out.vertices = solid.vertices;
  out.vertex_stratum = solid.vertex_stratum;
  out.edges = solid.edges;
  out.edge_stratum = solid.edge_stratum;
  for (const auto& f : solid.faces) {
    Vec3 c = Vec3::Zero();
    for (int k : f) c += solid.vertices[k];
    c /= double(f.size());
    const int ci = int(out.vertices.size());
    out.vertices.push_back(c);
    out.vertex_stratum.push_back(Stratum::Face);
    const int m = int(f.size());
    for (int i = 0; i < m; ++i) {
      out.edges.push_back({ci, f[i]});
      out.edge_stratum.push_back(Stratum::Face);
      out.faces.push_back({ci, f[i], f[(i + 1) % m]});
    }
  }
  out.params = {int(out.vertices.size()), int(out.edges.size()), int(out.faces.size()), 0, 3};
  out.axes = solid.axes;
  return out;
}

std::string kind_name(SolidKind kind) {
  switch (kind) {
    case SolidKind::Tetrahedron: return "tetrahedron";
    case SolidKind::Cube: return "cube";
    case SolidKind::Octahedron: return "octahedron";
    case SolidKind::Dodecahedron: return "dodecahedron";
    case SolidKind::Icosahedron: return "icosahedron";
  }
  return "";
}

char kind_letter(SolidKind kind) {
  switch (kind) {
    case SolidKind::Tetrahedron: return 'T';
    case SolidKind::Cube: return 'C';
    case SolidKind::Octahedron: return 'O';
    case SolidKind::Dodecahedron: return 'D';
    case SolidKind::Icosahedron: return 'I';
  }
  return '?';
}

std::optional<SolidKind> parse_kind(std::string_view text) {
  std::string t(text);
  for (auto& c : t) c = char(std::tolower(static_cast<unsigned char>(c)));
  for (SolidKind k : kAllKinds) {
    std::string letter(1, char(std::tolower(kind_letter(k))));
    if (t == kind_name(k) || t == letter) return k;
  }
  return std::nullopt;
}

}  // namespace platcfg
