#include "platcfg/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace platcfg {

namespace {

size_t expected_rotation_order(SolidKind kind) {
  switch (kind) {
    case SolidKind::Tetrahedron: return 12;
    case SolidKind::Cube:
    case SolidKind::Octahedron: return 24;
    case SolidKind::Dodecahedron:
    case SolidKind::Icosahedron: return 60;
  }
  return 0;
}

class PointLocator {
 public:
  PointLocator(const std::vector<ConfigPoint>& pts, double eps) : pts_(pts), eps_(eps) {
    order_.resize(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) order_[i] = int(i);
    std::sort(order_.begin(), order_.end(),
              [&](int a, int b) { return pts_[a].position.x() < pts_[b].position.x(); });
    xs_.reserve(pts.size());
    for (int i : order_) xs_.push_back(pts_[i].position.x());
  }

  int find(const Vec3& q) const {
    auto it = std::lower_bound(xs_.begin(), xs_.end(), q.x() - eps_);
    int best = -1;
    double bd = eps_;
    for (size_t k = size_t(it - xs_.begin()); k < xs_.size() && xs_[k] <= q.x() + eps_; ++k) {
      double d = (pts_[order_[k]].position - q).norm();
      if (d < bd) {
        bd = d;
        best = order_[k];
      }
    }
    return best;
  }

 private:
  const std::vector<ConfigPoint>& pts_;
  double eps_;
  std::vector<int> order_;
  std::vector<double> xs_;
};

}  // namespace

Isometry Isometry::from(const Mat3& m) {
  Isometry g;
  g.matrix = m;
  g.det_sign = m.determinant() > 0 ? 1 : -1;
  return g;
}

std::string class_name(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Full: return "Full";
    case SymmetryClass::RotationalOnly: return "RotationalOnly";
    case SymmetryClass::Neither: return "Neither";
  }
  return "";
}

std::optional<SymmetryClass> parse_class(const std::string& text) {
  for (auto c : {SymmetryClass::Full, SymmetryClass::RotationalOnly, SymmetryClass::Neither})
    if (class_name(c) == text) return c;
  return std::nullopt;
}

bool matrices_match(const Mat3& a, const Mat3& b, double eps) {
  return (a - b).cwiseAbs().maxCoeff() < eps;
}

std::optional<size_t> IsometryGroup::find(const Mat3& m, double eps) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (matrices_match(elements[i].matrix, m, eps)) return i;
  return std::nullopt;
}

std::vector<Vec3> IsometryGroup::orbit(const Vec3& p, double eps) const {
  std::vector<Vec3> out;
  for (const auto& g : elements) {
    Vec3 q = g(p);
    bool seen = false;
    for (const auto& r : out) seen = seen || (r - q).norm() < eps;
    if (!seen) out.push_back(q);
  }
  return out;
}

std::vector<Isometry> close_group(const std::vector<Mat3>& generators, double eps, size_t max_order) {
  std::vector<Isometry> elems{Isometry{}};
  auto known = [&](const Mat3& m) {
    for (const auto& e : elems)
      if (matrices_match(e.matrix, m, eps)) return true;
    return false;
  };
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Mat3 prod = g * elems[i].matrix;
      if (known(prod)) continue;
      elems.push_back(Isometry::from(prod));
      if (elems.size() > max_order) throw std::runtime_error("group closure does not terminate");
    }
  }
  return elems;
}

Mat3 rotation_about(const Vec3& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

Mat3 reflection_across(const Vec3& normal) {
  Vec3 n = normal.normalized();
  return Mat3::Identity() - 2.0 * n * n.transpose();
}

IsometryGroup rotation_group(SolidKind kind, double eps) {
  PlatonicSolid s = make_solid(kind);
  const auto& f0 = s.faces.front();
  Vec3 fc = Vec3::Zero();
  for (int k : f0) fc += s.vertices[k];
  Mat3 face_rot = rotation_about(fc, 2 * std::numbers::pi / double(f0.size()));
  IsometryGroup g;
  g.solid_kind = kind;
  g.variant = GroupVariant::Rotation;
  for (const auto& e : s.edges) {
    Mat3 edge_rot = rotation_about(s.vertices[e[0]] + s.vertices[e[1]], std::numbers::pi);
    auto elems = close_group({face_rot, edge_rot}, eps);
    if (elems.size() == expected_rotation_order(kind)) {
      g.elements = std::move(elems);
      return g;
    }
  }
  throw std::runtime_error("rotation group closure failed");
}

IsometryGroup full_group(SolidKind kind, double eps) {
  IsometryGroup rot = rotation_group(kind, eps);
  PlatonicSolid s = make_solid(kind);
  const auto& e = s.edges.front();
  Mat3 mirror = reflection_across(s.vertices[e[0]].cross(s.vertices[e[1]]));
  std::vector<Mat3> gens;
  for (const auto& g : rot.elements) gens.push_back(g.matrix);
  gens.push_back(mirror);
  IsometryGroup g;
  g.solid_kind = kind;
  g.variant = GroupVariant::Full;
  g.elements = close_group(gens, eps);
  if (g.elements.size() != 2 * rot.elements.size())
    throw std::runtime_error("full group closure failed");
  return g;
}

GeometricConfiguration apply(const Isometry& g, const GeometricConfiguration& config) {
  GeometricConfiguration out = config;
  for (auto& p : out.points) p.position = g(p.position);
  for (auto& l : out.lines) {
    l.anchor = g(l.anchor);
    l.direction = canonical_direction(g(l.direction));
  }
  return out;
}

std::optional<std::vector<int>> point_permutation(const GeometricConfiguration& config,
                                                  const Isometry& g, double eps) {
  PointLocator loc(config.points, eps);
  std::vector<int> perm(config.points.size(), -1);
  std::vector<char> hit(config.points.size(), 0);
  for (size_t i = 0; i < config.points.size(); ++i) {
    int j = loc.find(g(config.points[i].position));
    if (j < 0 || hit[j]) return std::nullopt;
    hit[j] = 1;
    perm[i] = j;
  }
  return perm;
}

namespace {

bool lines_invariant(const GeometricConfiguration& config, const std::vector<int>& perm,
                     const std::set<std::vector<int>>& line_sets) {
  for (const auto& l : config.lines) {
    std::vector<int> img;
    for (int p : l.point_ids) img.push_back(perm[p]);
    std::sort(img.begin(), img.end());
    if (!line_sets.count(img)) return false;
  }
  return true;
}

std::set<std::vector<int>> line_sets_of(const GeometricConfiguration& config) {
  std::set<std::vector<int>> sets;
  for (const auto& l : config.lines) {
    std::vector<int> s = l.point_ids;
    std::sort(s.begin(), s.end());
    sets.insert(s);
  }
  return sets;
}

}  // namespace

bool is_invariant(const GeometricConfiguration& config, const Isometry& g, double eps) {
  auto perm = point_permutation(config, g, eps);
  if (!perm) return false;
  return lines_invariant(config, *perm, line_sets_of(config));
}

bool is_invariant(const GeometricConfiguration& config, const IsometryGroup& group, double eps) {
  auto sets = line_sets_of(config);
  for (const auto& g : group.elements) {
    auto perm = point_permutation(config, g, eps);
    if (!perm || !lines_invariant(config, *perm, sets)) return false;
  }
  return true;
}

SymmetryClass classify(const GeometricConfiguration& config, SolidKind kind, double eps) {
  if (!is_invariant(config, rotation_group(kind, eps), eps)) return SymmetryClass::Neither;
  if (is_invariant(config, full_group(kind, eps), eps)) return SymmetryClass::Full;
  return SymmetryClass::RotationalOnly;
}

}  // namespace platcfg
