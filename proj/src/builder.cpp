#include "platcfg/builder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace platcfg {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

double parse_num(const std::string& s) {
  size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number: " + s);
  return v;
}

Vec2 rotate2(const Vec2& p, double a) {
  return {std::cos(a) * p.x() - std::sin(a) * p.y(), std::sin(a) * p.x() + std::cos(a) * p.y()};
}

// Clusters vectors closer than eps; returns a representative index per input.
std::vector<int> cluster(const std::vector<Vec3>& vs, double eps) {
  std::vector<int> order(vs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return vs[a].x() < vs[b].x(); });
  DisjointSets ds(vs.size());
  for (size_t a = 0; a < order.size(); ++a)
    for (size_t b = a + 1; b < order.size(); ++b) {
      if (vs[order[b]].x() - vs[order[a]].x() > eps) break;
      if ((vs[order[a]] - vs[order[b]]).norm() < eps) ds.unite(order[a], order[b]);
    }
  std::vector<int> rep(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) rep[i] = ds.find(int(i));
  return rep;
}

Provenance stratum_provenance(Stratum s) {
  switch (s) {
    case Stratum::Vertex: return Provenance::Vertex;
    case Stratum::Edge: return Provenance::EdgeInterior;
    case Stratum::Face: return Provenance::FaceInterior;
  }
  return Provenance::FaceInterior;
}

int center_index(const GeometricConfiguration& c, double eps) {
  for (const auto& p : c.points)
    if (p.position.norm() < eps) return p.id;
  return -1;
}

GeometricConfiguration add_lines_through_groups(GeometricConfiguration out,
                                                const std::vector<std::vector<int>>& groups,
                                                bool include_center, LineKind kind, double eps) {
  int center = -1;
  if (include_center) {
    center = center_index(out, eps);
    if (center < 0) {
      ConfigPoint c;
      c.id = int(out.points.size());
      c.position = Vec3::Zero();
      c.provenance = Provenance::Center;
      c.layer = -1;
      out.points.push_back(c);
      center = c.id;
    }
  }
  for (const auto& g : groups) {
    ConfigLine l;
    l.kind = kind;
    l.point_ids = g;
    if (center >= 0) l.point_ids.push_back(center);
    if (l.point_ids.size() < 2) throw std::runtime_error("augmentation line with fewer than 2 points");
    out.lines.push_back(l);
  }
  return canonicalize(out, eps);
}

}  // namespace

// ---------------------------------------------------------------- motifs

Motif parse_motif(const std::string& text) {
  Motif m;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("motif line " + std::to_string(lineno) + ": " + why);
    };
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (tag == "motif") {
      if (header || toks.size() != 3) fail("bad header");
      m.name = toks[0];
      if (toks[1].rfind("m=", 0) != 0) fail("expected m=");
      m.m = std::stoi(toks[1].substr(2));
      if (toks[2] == "sym=cyc") m.symmetry = MotifSymmetry::Cyc;
      else if (toks[2] == "sym=dih") m.symmetry = MotifSymmetry::Dih;
      else if (toks[2] == "sym=mir") m.symmetry = MotifSymmetry::Mirror;
      else fail("unknown symmetry");
      header = true;
    } else if (tag == "pt") {
      if (!header || toks.size() != 3 || toks[2].rfind("anchor=", 0) != 0) fail("bad point record");
      MotifPoint p;
      p.pos = {parse_num(toks[0]), parse_num(toks[1])};
      std::string a = toks[2].substr(7);
      if (a == "interior") {
        p.anchor = Anchor::interior();
      } else if (a.rfind("vertex:", 0) == 0) {
        p.anchor = Anchor::vertex(std::stoi(a.substr(7)));
      } else if (a.rfind("edge:", 0) == 0) {
        auto colon = a.find(':', 5);
        if (colon == std::string::npos) fail("bad edge anchor");
        p.anchor = Anchor::edge(std::stoi(a.substr(5, colon - 5)), parse_num(a.substr(colon + 1)));
      } else {
        fail("unknown anchor");
      }
      m.points.push_back(p);
    } else if (tag == "ln") {
      if (!header || toks.size() < 2) fail("bad line record");
      std::vector<int> ids;
      for (const auto& t : toks) ids.push_back(std::stoi(t));
      m.lines.push_back(ids);
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (!header) throw std::invalid_argument("motif header missing");
  return m;
}

std::string format_motif(const Motif& motif) {
  std::ostringstream o;
  const char* sym = motif.symmetry == MotifSymmetry::Cyc   ? "cyc"
                    : motif.symmetry == MotifSymmetry::Dih ? "dih"
                                                           : "mir";
  o << "motif " << motif.name << " m=" << motif.m << " sym=" << sym << "\n";
  for (const auto& p : motif.points) {
    o << "pt " << num(p.pos.x()) << " " << num(p.pos.y()) << " anchor=";
    switch (p.anchor.type) {
      case Anchor::Type::Vertex: o << "vertex:" << p.anchor.index; break;
      case Anchor::Type::Edge: o << "edge:" << p.anchor.index << ":" << num(p.anchor.t); break;
      case Anchor::Type::Interior: o << "interior"; break;
    }
    o << "\n";
  }
  for (const auto& l : motif.lines) {
    o << "ln";
    for (int i : l) o << " " << i;
    o << "\n";
  }
  return o.str();
}

std::vector<int> motif_valences(const Motif& motif) {
  std::vector<int> v(motif.points.size(), 0);
  for (const auto& l : motif.lines)
    for (int i : l)
      if (i >= 0 && i < int(v.size())) ++v[i];
  return v;
}

std::vector<std::string> motif_problems(const Motif& motif, double eps) {
  std::vector<std::string> out;
  const int m = motif.m;
  if (m < 3) return {"gonality must be at least 3"};
  const int n = int(motif.points.size());
  for (int i = 0; i < n; ++i) {
    const auto& p = motif.points[i];
    const auto& a = p.anchor;
    std::string tag = "point " + std::to_string(i) + ": ";
    if (a.type == Anchor::Type::Vertex) {
      if (a.index < 0 || a.index >= m) out.push_back(tag + "vertex index out of range");
      else if ((p.pos - reference_corner(m, a.index)).norm() > eps)
        out.push_back(tag + "not at its corner");
    } else if (a.type == Anchor::Type::Edge) {
      if (a.index < 0 || a.index >= m || !(a.t > 0 && a.t < 1)) {
        out.push_back(tag + "bad edge anchor");
      } else {
        Vec2 q = (1 - a.t) * reference_corner(m, a.index) + a.t * reference_corner(m, (a.index + 1) % m);
        if ((p.pos - q).norm() > eps) out.push_back(tag + "not at its edge parameter");
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((motif.points[i].pos - motif.points[j].pos).norm() <= eps)
        out.push_back("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  std::map<std::pair<int, int>, int> pairs;
  for (int li = 0; li < int(motif.lines.size()); ++li) {
    const auto& l = motif.lines[li];
    std::string tag = "line " + std::to_string(li) + ": ";
    std::set<int> u(l.begin(), l.end());
    bool ok = l.size() >= 2 && u.size() == l.size();
    for (int i : l) ok = ok && i >= 0 && i < n;
    if (!ok) {
      out.push_back(tag + "invalid point list");
      continue;
    }
    std::vector<Vec3> pts;
    for (int i : l) pts.emplace_back(motif.points[i].pos.x(), motif.points[i].pos.y(), 0.0);
    auto [anchor, dir] = fit_line(pts);
    for (const auto& q : pts)
      if (distance_to_line(q, anchor, dir) > eps) {
        out.push_back(tag + "not collinear");
        break;
      }
    for (size_t x = 0; x < l.size(); ++x)
      for (size_t y = x + 1; y < l.size(); ++y) {
        auto [it, fresh] = pairs.emplace(std::minmax(l[x], l[y]), li);
        if (!fresh) out.push_back(tag + "shares two points with line " + std::to_string(it->second));
      }
  }
  // declared symmetry
  auto check_map = [&](auto&& f, const std::string& what) {
    std::vector<int> perm(n, -1);
    for (int i = 0; i < n; ++i) {
      Vec2 q = f(motif.points[i].pos);
      for (int j = 0; j < n; ++j)
        if ((motif.points[j].pos - q).norm() <= eps) perm[i] = j;
      if (perm[i] < 0) {
        out.push_back("declared " + what + " symmetry does not map point " + std::to_string(i));
        return;
      }
    }
    std::set<std::vector<int>> sets;
    for (const auto& l : motif.lines) {
      std::vector<int> s = l;
      std::sort(s.begin(), s.end());
      sets.insert(s);
    }
    for (const auto& l : motif.lines) {
      std::vector<int> s;
      for (int i : l) s.push_back(perm[i]);
      std::sort(s.begin(), s.end());
      if (!sets.count(s)) {
        out.push_back("declared " + what + " symmetry does not map the lines");
        return;
      }
    }
  };
  if (motif.symmetry != MotifSymmetry::Mirror)
    check_map([&](const Vec2& p) { return rotate2(p, 2 * std::numbers::pi / m); }, "rotational");
  if (motif.symmetry != MotifSymmetry::Cyc)
    check_map([](const Vec2& p) { return Vec2(p.x(), -p.y()); }, "mirror");
  return out;
}

void validate_motif(const Motif& motif, double eps) {
  auto problems = motif_problems(motif, eps);
  if (!problems.empty()) throw std::invalid_argument("motif " + motif.name + ": " + problems.front());
}

bool edge_anchors_symmetric(const Motif& motif, double eps) {
  for (int e = 0; e < motif.m; ++e) {
    std::vector<double> ts;
    for (const auto& p : motif.points)
      if (p.anchor.type == Anchor::Type::Edge && p.anchor.index == e) ts.push_back(p.anchor.t);
    for (double t : ts) {
      bool found = false;
      for (double s : ts) found = found || std::abs(s - (1 - t)) <= eps;
      if (!found) return false;
    }
  }
  return true;
}

std::pair<long, long> predict_counts(const SolidParams& params, const CountSpec& s) {
  long p = long(s.x) * params.v + long(s.y) * params.e + long(s.z) * params.f;
  long l = long(s.u) * params.e + long(s.vv) * params.f;
  return {p, l};
}

CountSpec count_spec_of(const Motif& motif, bool edge_lines) {
  CountSpec s;
  for (const auto& p : motif.points) {
    if (p.anchor.type == Anchor::Type::Vertex) s.x = 1;
    if (p.anchor.type == Anchor::Type::Edge && p.anchor.index == 0) ++s.y;
    if (p.anchor.type == Anchor::Type::Interior) ++s.z;
  }
  s.u = edge_lines ? 1 : 0;
  s.vv = int(motif.lines.size());
  return s;
}

// -------------------------------------------------------------- placement

void RawAssembly::append(const RawAssembly& other) {
  const int base = int(points.size());
  points.insert(points.end(), other.points.begin(), other.points.end());
  for (auto l : other.lines) {
    for (int& i : l.points) i += base;
    lines.push_back(l);
  }
}

RawAssembly place_on_faces(const PlatonicSolid& solid, const Motif& motif, int layer, double scale,
                           CornerRule rule, int copy_offset) {
  validate_motif(motif);
  RawAssembly raw;
  for (int fi = 0; fi < int(solid.faces.size()); ++fi) {
    const auto& face = solid.faces[fi];
    const int m = int(face.size());
    if (m != motif.m)
      throw std::invalid_argument("motif gonality " + std::to_string(motif.m) + " does not match face size " +
                                  std::to_string(m));
    int first = 0;
    if (rule == CornerRule::PolarVertex) {
      double best = -1;
      for (int i = 0; i < m; ++i) {
        double z = std::abs(solid.vertices[face[i]].z());
        if (z > best + 1e-12) {
          best = z;
          first = i;
        }
      }
    }
    FaceFrame fr = face_frame(solid, fi, scale, first);
    const int base = int(raw.points.size());
    for (const auto& p : motif.points) {
      StagedPoint s;
      s.pos = fr(p.pos);
      s.layer = layer;
      s.copy = copy_offset + fi;
      switch (p.anchor.type) {
        case Anchor::Type::Vertex:
          s.provenance = stratum_provenance(solid.vertex_stratum[face[(p.anchor.index + first) % m]]);
          break;
        case Anchor::Type::Edge: {
          int a = face[(p.anchor.index + first) % m], b = face[(p.anchor.index + first + 1) % m];
          int ei = solid.edge_index(a, b);
          if (ei < 0) throw std::logic_error("face edge missing from edge list");
          s.provenance = stratum_provenance(solid.edge_stratum[ei]);
          break;
        }
        case Anchor::Type::Interior: s.provenance = Provenance::FaceInterior; break;
      }
      raw.points.push_back(s);
    }
    for (const auto& l : motif.lines) {
      StagedLine sl;
      for (int i : l) sl.points.push_back(base + i);
      raw.lines.push_back(sl);
    }
  }
  return raw;
}

GeometricConfiguration glue(const RawAssembly& raw, double eps) {
  std::vector<Vec3> pos;
  for (const auto& p : raw.points) pos.push_back(p.pos);
  auto rep = cluster(pos, eps);
  std::map<int, int> id_of;
  GeometricConfiguration out;
  for (size_t i = 0; i < raw.points.size(); ++i) {
    auto [it, fresh] = id_of.emplace(rep[i], int(out.points.size()));
    if (fresh) {
      ConfigPoint cp;
      cp.id = it->second;
      cp.position = raw.points[rep[i]].pos;
      cp.provenance = raw.points[rep[i]].provenance;
      cp.layer = raw.points[rep[i]].layer;
      out.points.push_back(cp);
    }
    auto& cp = out.points[it->second];
    if (int(raw.points[i].provenance) < int(cp.provenance)) cp.provenance = raw.points[i].provenance;
  }
  std::vector<std::set<int>> sets;
  std::vector<LineKind> kinds;
  for (const auto& l : raw.lines) {
    std::set<int> s;
    for (int i : l.points) s.insert(id_of.at(rep[i]));
    if (s.size() < 2) throw std::runtime_error("staged line collapses to a single point");
    sets.push_back(s);
    kinds.push_back(l.kind);
  }
  // merge lines sharing two points until stable
  for (bool changed = true; changed;) {
    changed = false;
    DisjointSets ds(sets.size());
    std::map<std::pair<int, int>, int> owner;
    for (int li = 0; li < int(sets.size()); ++li) {
      std::vector<int> v(sets[li].begin(), sets[li].end());
      for (size_t a = 0; a < v.size(); ++a)
        for (size_t b = a + 1; b < v.size(); ++b) {
          auto [it, fresh] = owner.emplace(std::make_pair(v[a], v[b]), li);
          if (!fresh && ds.unite(it->second, li)) changed = true;
        }
    }
    if (!changed) break;
    std::map<int, int> slot;
    std::vector<std::set<int>> merged;
    std::vector<LineKind> mk;
    for (int li = 0; li < int(sets.size()); ++li) {
      int r = ds.find(li);
      auto [it, fresh] = slot.emplace(r, int(merged.size()));
      if (fresh) {
        merged.push_back({});
        mk.push_back(kinds[li]);
      }
      merged[it->second].insert(sets[li].begin(), sets[li].end());
      if (int(kinds[li]) < int(mk[it->second])) mk[it->second] = kinds[li];
    }
    sets = std::move(merged);
    kinds = std::move(mk);
  }
  for (size_t li = 0; li < sets.size(); ++li) {
    ConfigLine l;
    l.kind = kinds[li];
    l.point_ids.assign(sets[li].begin(), sets[li].end());
    std::vector<Vec3> pts;
    for (int i : l.point_ids) pts.push_back(out.points[i].position);
    auto [a, d] = fit_line(pts);
    for (const auto& q : pts)
      if (distance_to_line(q, a, d) > eps) throw std::runtime_error("glued line is not collinear");
    out.lines.push_back(l);
  }
  return canonicalize(out, eps);
}

bool PointSelector::matches(const ConfigPoint& p, int val) const {
  if (valence && *valence != val) return false;
  if (provenance && *provenance != p.provenance) return false;
  return true;
}

GeometricConfiguration add_edge_lines(const GeometricConfiguration& config, const PlatonicSolid& solid,
                                      double layer_scale, double eps) {
  GeometricConfiguration out = config;
  bool any = false;
  for (const auto& e : solid.edges) {
    Vec3 a = solid.center + layer_scale * (solid.vertices[e[0]] - solid.center);
    Vec3 b = solid.center + layer_scale * (solid.vertices[e[1]] - solid.center);
    Vec3 d = (b - a).normalized();
    double len = (b - a).norm();
    ConfigLine l;
    l.kind = LineKind::SolidEdge;
    for (const auto& p : config.points) {
      double t = (p.position - a).dot(d);
      if (t < -eps || t > len + eps) continue;
      if (distance_to_line(p.position, a, d) <= eps) l.point_ids.push_back(p.id);
    }
    if (l.point_ids.size() < 2) throw std::runtime_error("edge line with fewer than 2 points");
    out.lines.push_back(l);
    any = true;
  }
  if (!any) throw std::runtime_error("solid has no edges");
  return canonicalize(out, eps);
}

GeometricConfiguration add_radial_lines(const GeometricConfiguration& config, const PointSelector& sel,
                                        bool include_center, double eps) {
  auto val = point_valences(config);
  std::vector<int> chosen;
  std::vector<Vec3> dirs;
  for (const auto& p : config.points) {
    if (!sel.matches(p, val[p.id]) || p.position.norm() < eps) continue;
    chosen.push_back(p.id);
    dirs.push_back(p.position.normalized());
  }
  auto rep = cluster(dirs, eps);
  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < chosen.size(); ++i) groups[rep[i]].push_back(chosen[i]);
  std::vector<std::vector<int>> gs;
  for (auto& [k, g] : groups) gs.push_back(g);
  return add_lines_through_groups(config, gs, include_center, LineKind::Radial, eps);
}

GeometricConfiguration add_antipodal_lines(const GeometricConfiguration& config, const PointSelector& sel,
                                           bool include_center, LineKind kind, bool require_central_symmetry,
                                           double eps) {
  if (require_central_symmetry && config.meta.solid && *config.meta.solid == SolidKind::Tetrahedron)
    throw std::invalid_argument("antipodal lines need a centrally symmetric solid");
  auto val = point_valences(config);
  std::vector<Vec3> all;
  for (const auto& p : config.points) all.push_back(p.position);
  std::vector<int> chosen;
  std::vector<Vec3> dirs;
  for (const auto& p : config.points) {
    if (!sel.matches(p, val[p.id]) || p.position.norm() < eps) continue;
    if (require_central_symmetry) {
      bool found = false;
      for (const auto& q : config.points) found = found || (q.position + p.position).norm() < eps;
      if (!found) throw std::invalid_argument("point P" + std::to_string(p.id) + " has no antipode");
    }
    chosen.push_back(p.id);
    dirs.push_back(canonical_direction(p.position));
  }
  auto rep = cluster(dirs, eps);
  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < chosen.size(); ++i) groups[rep[i]].push_back(chosen[i]);
  std::vector<std::vector<int>> gs;
  for (auto& [k, g] : groups) gs.push_back(g);
  return add_lines_through_groups(config, gs, include_center, kind, eps);
}

std::vector<std::pair<Vec3, Vec3>> adjacent_vertex_axes(const PlatonicSolid& solid) {
  std::vector<std::pair<Vec3, Vec3>> out;
  for (const auto& e : solid.edges)
    out.emplace_back((solid.vertices[e[0]] - solid.center).normalized(),
                     (solid.vertices[e[1]] - solid.center).normalized());
  return out;
}

GeometricConfiguration place_on_axis_planes(const PlatonicSolid& solid, const AxisMotif& motif,
                                            const std::vector<std::pair<Vec3, Vec3>>& axis_pairs,
                                            double eps) {
  RawAssembly raw;
  int copy = 0;
  for (const auto& [a, b] : axis_pairs) {
    const int base = int(raw.points.size());
    for (const auto& p : motif.points) {
      StagedPoint s;
      s.pos = solid.center + p.coef.x() * a + p.coef.y() * b;
      s.provenance = p.on_axis ? Provenance::Axis : Provenance::FaceInterior;
      s.copy = copy;
      if (p.on_axis) {
        bool on = false;
        for (const auto& ax : solid.axes)
          on = on || distance_to_line(s.pos, solid.center, ax.dir) <= eps;
        if (!on) throw std::invalid_argument("axis anchor is off every axis after embedding");
      }
      raw.points.push_back(s);
    }
    for (const auto& l : motif.lines) {
      StagedLine sl;
      for (int i : l) sl.points.push_back(base + i);
      raw.lines.push_back(sl);
    }
    ++copy;
  }
  if (raw.points.empty()) return {};
  return glue(raw, eps);
}

GeometricConfiguration add_axis_lines(const GeometricConfiguration& config, const PlatonicSolid& solid,
                                      int order, double eps) {
  std::vector<std::vector<int>> groups;
  for (const auto& ax : solid.axes) {
    if (ax.order != order) continue;
    std::vector<int> g;
    for (const auto& p : config.points)
      if (p.position.norm() >= eps && distance_to_line(p.position, solid.center, ax.dir) <= eps)
        g.push_back(p.id);
    groups.push_back(g);
  }
  if (groups.empty()) throw std::invalid_argument("solid has no axis of order " + std::to_string(order));
  return add_lines_through_groups(config, groups, true, LineKind::AxisLine, eps);
}

// ------------------------------------------------------------- helical

namespace {

struct HelicalVertex {
  Vec3 e0[3], next[3], prev[3], corner[3];
  int nb[3];
};

std::vector<int> edge_classes(const PlatonicSolid& s, int& count) {
  std::map<std::pair<int, int>, std::vector<int>> sizes;
  for (const auto& f : s.faces)
    for (size_t i = 0; i < f.size(); ++i) {
      int a = f[i], b = f[(i + 1) % f.size()];
      sizes[std::minmax(a, b)].push_back(int(f.size()));
    }
  std::vector<std::tuple<double, int, int>> keys;
  for (const auto& e : s.edges) {
    auto fs = sizes[std::minmax(e[0], e[1])];
    std::sort(fs.begin(), fs.end());
    double d = ((s.vertices[e[0]] + s.vertices[e[1]]) / 2 - s.center).norm();
    keys.emplace_back(d, fs.empty() ? 0 : fs.front(), fs.empty() ? 0 : fs.back());
  }
  std::vector<std::tuple<double, int, int>> levels;
  auto same = [](const auto& x, const auto& y) {
    return std::abs(std::get<0>(x) - std::get<0>(y)) < 1e-7 && std::get<1>(x) == std::get<1>(y) &&
           std::get<2>(x) == std::get<2>(y);
  };
  for (const auto& k : keys)
    if (std::none_of(levels.begin(), levels.end(), [&](const auto& l) { return same(l, k); })) levels.push_back(k);
  std::sort(levels.begin(), levels.end());
  std::vector<int> cls;
  for (const auto& k : keys)
    for (size_t i = 0; i < levels.size(); ++i)
      if (same(levels[i], k)) cls.push_back(int(i));
  count = int(levels.size());
  return cls;
}

std::vector<std::vector<int>> vertex_neighbours(const PlatonicSolid& s) {
  std::vector<std::vector<int>> nb(s.vertices.size());
  for (const auto& e : s.edges) {
    nb[e[0]].push_back(e[1]);
    nb[e[1]].push_back(e[0]);
  }
  for (size_t v = 0; v < nb.size(); ++v) {
    if (nb[v].size() != 3) throw std::invalid_argument("polyhedron is not trivalent");
    Vec3 z = (s.vertices[v] - s.center).normalized();
    Vec3 ref = s.vertices[nb[v][0]] - s.vertices[v];
    ref = (ref - ref.dot(z) * z).normalized();
    Vec3 y = z.cross(ref);
    auto angle = [&](int j) {
      Vec3 d = s.vertices[j] - s.vertices[v];
      return std::atan2(d.dot(y), d.dot(ref));
    };
    std::sort(nb[v].begin(), nb[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
  }
  return nb;
}

HelicalVertex helical_vertex(const PlatonicSolid& s, int v, const std::vector<int>& nb,
                             const std::vector<int>& cls, const std::vector<HelicalEdgeParams>& prm) {
  const double R = s.circumradius();
  HelicalVertex h;
  const Vec3& V = s.vertices[v];
  for (int k = 0; k < 3; ++k) {
    const int j = nb[k];
    h.nb[k] = j;
    const auto& p = prm[cls[s.edge_index(v, j)]];
    Vec3 c = (V + s.vertices[j]) / 2;
    Vec3 e = (V - c).normalized();
    Vec3 n = e.cross((c - s.center).normalized());
    h.e0[k] = c + p.a * R * e;
    Vec3 toward = s.vertices[nb[(k + 1) % 3]] - V;
    for (int sg : {1, -1}) {
      Vec3 q = c + p.b * R * (std::cos(p.theta) * e + sg * std::sin(p.theta) * n);
      (sg * n.dot(toward) > 0 ? h.next[k] : h.prev[k]) = q;
    }
  }
  for (int k = 0; k < 3; ++k) h.corner[k] = (h.next[k] + h.prev[(k + 1) % 3]) / 2;
  return h;
}

std::vector<std::array<Vec3, 3>> helical_vertex_lines(const HelicalVertex& h) {
  std::vector<std::array<Vec3, 3>> out;
  for (int k = 0; k < 3; ++k) {
    out.push_back({h.next[k], h.corner[k], h.prev[(k + 1) % 3]});
    out.push_back({h.e0[k], h.next[(k + 2) % 3], h.corner[k]});
    out.push_back({h.e0[k], h.prev[(k + 1) % 3], h.corner[(k + 2) % 3]});
  }
  return out;
}

}  // namespace

std::vector<HelicalEdgeParams> solve_helical(const PlatonicSolid& trivalent,
                                             std::vector<HelicalEdgeParams> guess) {
  int nclass = 0;
  auto cls = edge_classes(trivalent, nclass);
  if (int(guess.size()) != nclass) throw std::invalid_argument("one helical guess per edge class expected");
  auto nb = vertex_neighbours(trivalent);
  auto residual = [&](const Eigen::VectorXd& x) {
    std::vector<HelicalEdgeParams> p(nclass);
    for (int i = 0; i < nclass; ++i) p[i] = {x[3 * i], x[3 * i + 1], x[3 * i + 2]};
    std::vector<double> r;
    for (const auto& l : helical_vertex_lines(helical_vertex(trivalent, 0, nb[0], cls, p))) {
      Vec3 c = (l[1] - l[0]).cross(l[2] - l[0]);
      r.insert(r.end(), {c.x(), c.y(), c.z()});
    }
    return Eigen::Map<Eigen::VectorXd>(r.data(), Eigen::Index(r.size())).eval();
  };
  Eigen::VectorXd x(3 * nclass);
  for (int i = 0; i < nclass; ++i) x.segment<3>(3 * i) << guess[i].theta, guess[i].a, guess[i].b;
  for (int it = 0; it < 100; ++it) {
    Eigen::VectorXd r = residual(x);
    if (r.cwiseAbs().maxCoeff() < 1e-15) break;
    Eigen::MatrixXd J(r.size(), x.size());
    for (Eigen::Index c = 0; c < x.size(); ++c) {
      Eigen::VectorXd h = x;
      h[c] += 1e-7;
      J.col(c) = (residual(h) - r) / 1e-7;
    }
    x -= J.completeOrthogonalDecomposition().solve(r);
  }
  if (residual(x).cwiseAbs().maxCoeff() > 1e-12) throw std::runtime_error("helical closure did not converge");
  std::vector<HelicalEdgeParams> out(nclass);
  for (int i = 0; i < nclass; ++i) {
    out[i] = {x[3 * i], x[3 * i + 1], x[3 * i + 2]};
    if (std::abs(std::sin(out[i].theta)) < 1e-6) throw std::runtime_error("helical closure degenerated to theta = 0");
  }
  return out;
}

GeometricConfiguration helical_configuration(const PlatonicSolid& trivalent,
                                             const std::vector<HelicalEdgeParams>& params, double eps) {
  int nclass = 0;
  auto cls = edge_classes(trivalent, nclass);
  if (int(params.size()) != nclass) throw std::invalid_argument("one helical parameter set per edge class expected");
  auto nb = vertex_neighbours(trivalent);
  RawAssembly raw;
  auto add = [&](const Vec3& q, Provenance prov) {
    raw.points.push_back({q, prov, 0, 0});
    return int(raw.points.size()) - 1;
  };
  for (int v = 0; v < int(trivalent.vertices.size()); ++v) {
    HelicalVertex h = helical_vertex(trivalent, v, nb[v], cls, params);
    for (const auto& l : helical_vertex_lines(h)) {
      StagedLine sl;
      for (const auto& q : l) sl.points.push_back(add(q, Provenance::FaceInterior));
      raw.lines.push_back(sl);
    }
    for (int k = 0; k < 3; ++k) {
      Vec3 c = (trivalent.vertices[v] + trivalent.vertices[h.nb[k]]) / 2;
      std::pair<Vec3, Provenance> ends[] = {{h.e0[k], Provenance::EdgeInterior},
                                            {h.next[k], Provenance::FaceInterior},
                                            {h.prev[k], Provenance::FaceInterior}};
      for (const auto& [q, prov] : ends) {
        StagedLine sl;
        sl.points = {add(q, prov), add(c, Provenance::EdgeInterior), add(2 * c - q, prov)};
        raw.lines.push_back(sl);
      }
    }
  }
  return glue(raw, eps);
}

// -------------------------------------------------------------- plans

PlatonicSolid plan_solid(const BuildPlan& plan, SolidKind kind) {
  PlatonicSolid s = make_solid(kind);
  if (plan.derivation == Derivation::Triangulated) return triangulate_faces(s);
  if (plan.derivation == Derivation::Truncated) return truncate_to_trivalent(s);
  return s;
}

GeometricConfiguration run_plan(const BuildPlan& plan, SolidKind kind, const Motif& motif, double eps) {
  PlatonicSolid solid = plan_solid(plan, kind);
  LayerSpec layers = LayerSpec::geometric(plan.layers);
  RawAssembly raw;
  for (int i = 0; i < plan.layers; ++i)
    raw.append(place_on_faces(solid, motif, i, layers.scales[i], plan.corner_rule,
                              i * int(solid.faces.size())));
  GeometricConfiguration c = glue(raw, eps);
  c.meta.solid = kind;
  c.meta.layer_scales = layers.scales;
  for (const auto& step : plan.steps) {
    switch (step.kind) {
      case Augmentation::Kind::EdgeLines:
        for (double s : layers.scales) c = add_edge_lines(c, solid, s, eps);
        break;
      case Augmentation::Kind::Radial:
        c = add_radial_lines(c, step.selector, step.include_center, eps);
        break;
      case Augmentation::Kind::Antipodal:
        c = add_antipodal_lines(c, step.selector, step.include_center, LineKind::Antipodal, true, eps);
        break;
    }
  }
  return c;
}

}  // namespace platcfg
