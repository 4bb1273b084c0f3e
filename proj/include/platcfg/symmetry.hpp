#pragma once

#include "platcfg/incidence.hpp"
#include "platcfg/solids.hpp"

#include <optional>
#include <string>
#include <vector>

namespace platcfg {

struct Isometry {
  Mat3 matrix = Mat3::Identity();
  int det_sign = 1;

  static Isometry from(const Mat3& m);
  Vec3 operator()(const Vec3& p) const { return matrix * p; }
};

enum class GroupVariant { Rotation, Full };

struct IsometryGroup {
  SolidKind solid_kind = SolidKind::Tetrahedron;
  GroupVariant variant = GroupVariant::Rotation;
  std::vector<Isometry> elements;

  size_t order() const { return elements.size(); }
  std::optional<size_t> find(const Mat3& m, double eps = kEps) const;
  bool contains(const Mat3& m, double eps = kEps) const { return find(m, eps).has_value(); }
  std::vector<Vec3> orbit(const Vec3& p, double eps = kEps) const;
};

enum class SymmetryClass { Full, RotationalOnly, Neither };

std::string class_name(SymmetryClass c);
std::optional<SymmetryClass> parse_class(const std::string& text);

bool matrices_match(const Mat3& a, const Mat3& b, double eps = kEps);

// Closure of a generator set; throws std::runtime_error if the closure
// exceeds max_order elements.
std::vector<Isometry> close_group(const std::vector<Mat3>& generators, double eps = kEps,
                                  size_t max_order = 240);

IsometryGroup rotation_group(SolidKind kind, double eps = kEps);
IsometryGroup full_group(SolidKind kind, double eps = kEps);

Mat3 rotation_about(const Vec3& axis, double angle);
Mat3 reflection_across(const Vec3& normal);

GeometricConfiguration apply(const Isometry& g, const GeometricConfiguration& config);

// Induced point permutation if g maps the point set onto itself.
std::optional<std::vector<int>> point_permutation(const GeometricConfiguration& config,
                                                  const Isometry& g, double eps = kEps);
bool is_invariant(const GeometricConfiguration& config, const Isometry& g, double eps = kEps);
bool is_invariant(const GeometricConfiguration& config, const IsometryGroup& group,
                  double eps = kEps);
SymmetryClass classify(const GeometricConfiguration& config, SolidKind kind, double eps = kEps);

}  // namespace platcfg
