#include "platcfg/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
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
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

const char* kProvenanceNames[] = {"vertex", "edge", "face", "axis", "center"};
const char* kLineKindNames[] = {"motif", "solid_edge", "radial", "antipodal", "axis"};

std::vector<std::pair<int, int>> tally(const std::vector<int>& valences) {
  std::map<int, int, std::greater<>> counts;
  for (int v : valences) ++counts[v];
  std::vector<std::pair<int, int>> out;
  for (auto [val, cnt] : counts) out.emplace_back(cnt, val);
  return out;
}

std::string format_classes(const std::vector<std::pair<int, int>>& classes) {
  std::string out;
  for (size_t i = 0; i < classes.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(classes[i].first) + "_" + std::to_string(classes[i].second);
  }
  return out;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

}  // namespace

std::string provenance_name(Provenance p) { return kProvenanceNames[int(p)]; }

std::optional<Provenance> parse_provenance(const std::string& s) {
  for (int i = 0; i < 5; ++i)
    if (s == kProvenanceNames[i]) return Provenance(i);
  return std::nullopt;
}

std::string line_kind_name(LineKind k) { return kLineKindNames[int(k)]; }

std::optional<LineKind> parse_line_kind(const std::string& s) {
  for (int i = 0; i < 5; ++i)
    if (s == kLineKindNames[i]) return LineKind(i);
  return std::nullopt;
}

int ValenceSignature::point_count() const {
  int n = 0;
  for (auto [c, v] : point_classes) n += c;
  return n;
}

int ValenceSignature::line_count() const {
  int n = 0;
  for (auto [c, v] : line_classes) n += c;
  return n;
}

long ValenceSignature::point_incidences() const {
  long n = 0;
  for (auto [c, v] : point_classes) n += long(c) * v;
  return n;
}

long ValenceSignature::line_incidences() const {
  long n = 0;
  for (auto [c, v] : line_classes) n += long(c) * v;
  return n;
}

bool ValenceSignature::balanced() const {
  return point_classes.size() == 1 && point_classes == line_classes;
}

std::vector<int> point_valences(const GeometricConfiguration& config) {
  std::vector<int> val(config.points.size(), 0);
  for (const auto& l : config.lines)
    for (int p : l.point_ids)
      if (p >= 0 && p < int(val.size())) ++val[p];
  return val;
}

ValenceSignature census(const GeometricConfiguration& config) {
  ValenceSignature sig;
  sig.point_classes = tally(point_valences(config));
  std::vector<int> lv;
  for (const auto& l : config.lines) lv.push_back(int(l.point_ids.size()));
  sig.line_classes = tally(lv);
  return sig;
}

std::string format_signature(const ValenceSignature& sig) {
  if (sig.balanced()) return "(" + format_classes(sig.point_classes) + ")";
  std::string lhs = format_classes(sig.point_classes);
  std::string rhs = format_classes(sig.line_classes);
  if (rhs.empty()) return "(" + lhs + ",)";
  return "(" + lhs + ", " + rhs + ")";
}

std::optional<ValenceSignature> parse_signature(const std::string& text) {
  static const std::regex outer(R"(^\s*\(([^,]*)(,([^,]*))?\)\s*$)");
  static const std::regex item(R"((\d+)_(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, outer)) return std::nullopt;
  auto parse_part = [&](const std::string& part, std::vector<std::pair<int, int>>& out) {
    std::istringstream in(part);
    std::string tok;
    while (in >> tok) {
      std::smatch im;
      if (!std::regex_match(tok, im, item)) return false;
      out.emplace_back(std::stoi(im[1]), std::stoi(im[2]));
    }
    return true;
  };
  ValenceSignature sig;
  if (!parse_part(m[1].str(), sig.point_classes)) return std::nullopt;
  if (m[2].matched) {
    if (!parse_part(m[3].str(), sig.line_classes)) return std::nullopt;
  } else {
    sig.line_classes = sig.point_classes;
  }
  auto by_valence = [](auto a, auto b) { return a.second > b.second; };
  std::sort(sig.point_classes.begin(), sig.point_classes.end(), by_valence);
  std::sort(sig.line_classes.begin(), sig.line_classes.end(), by_valence);
  return sig;
}

Vec3 canonical_direction(Vec3 d) {
  d.normalize();
  for (int i = 0; i < 3; ++i) {
    if (std::abs(d[i]) > 1e-6) {
      if (d[i] < 0) d = -d;
      break;
    }
  }
  return d;
}

std::pair<Vec3, Vec3> fit_line(const std::vector<Vec3>& pts) {
  Vec3 c = Vec3::Zero();
  for (const auto& p : pts) c += p;
  c /= double(std::max<size_t>(pts.size(), 1));
  Mat3 cov = Mat3::Zero();
  for (const auto& p : pts) cov += (p - c) * (p - c).transpose();
  Eigen::SelfAdjointEigenSolver<Mat3> es(cov);
  Vec3 d = canonical_direction(es.eigenvectors().col(2));
  Vec3 anchor = c - c.dot(d) * d;
  return {anchor, d};
}

double distance_to_line(const Vec3& p, const Vec3& anchor, const Vec3& dir) {
  Vec3 w = p - anchor;
  return (w - w.dot(dir) * dir).norm();
}

bool VerificationReport::passes() const {
  return errors.empty() && max_residual <= eps && shared_pairs.empty() && underused_points.empty();
}

std::string VerificationReport::text() const {
  std::ostringstream o;
  o << "max collinearity residual: " << sci(max_residual) << " (limit " << sci(eps) << ")\n";
  o << "line pairs sharing >= 2 points: " << shared_pairs.size() << "\n";
  for (size_t i = 0; i < shared_pairs.size() && i < 10; ++i)
    o << "  L" << shared_pairs[i].first << " L" << shared_pairs[i].second << "\n";
  o << "points on < 2 lines: " << underused_points.size() << "\n";
  for (size_t i = 0; i < underused_points.size() && i < 10; ++i)
    o << "  P" << underused_points[i] << "\n";
  o << "structural errors: " << errors.size() << "\n";
  for (const auto& e : errors) o << "  " << e << "\n";
  o << "warnings: " << warnings.size() << "\n";
  for (size_t i = 0; i < warnings.size() && i < 10; ++i) o << "  " << warnings[i] << "\n";
  o << "axioms: " << (passes() ? "PASS" : "FAIL") << "\n";
  return o.str();
}

VerificationReport verify_axioms(const GeometricConfiguration& config, double eps, double warn) {
  VerificationReport r;
  r.eps = eps;
  const int np = int(config.points.size());
  for (int i = 0; i < np; ++i)
    if (config.points[i].id != i) {
      r.errors.push_back("point ids are not dense");
      break;
    }
  for (int i = 0; i < int(config.lines.size()); ++i)
    if (config.lines[i].id != i) {
      r.errors.push_back("line ids are not dense");
      break;
    }
  {
    std::vector<int> order(np);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return config.points[a].position.x() < config.points[b].position.x();
    });
    for (int a = 0; a < np; ++a)
      for (int b = a + 1; b < np; ++b) {
        const auto& pa = config.points[order[a]].position;
        const auto& pb = config.points[order[b]].position;
        if (pb.x() - pa.x() > eps) break;
        if ((pa - pb).norm() <= eps) {
          r.errors.push_back("points P" + std::to_string(std::min(order[a], order[b])) + " and P" +
                             std::to_string(std::max(order[a], order[b])) + " coincide");
        }
      }
  }
  std::map<std::pair<int, int>, int> pair_owner;
  std::set<std::pair<int, int>> shared;
  std::vector<Vec3> anchors(config.lines.size()), dirs(config.lines.size());
  for (int li = 0; li < int(config.lines.size()); ++li) {
    const auto& l = config.lines[li];
    std::set<int> uniq(l.point_ids.begin(), l.point_ids.end());
    bool ok = uniq.size() == l.point_ids.size() && l.point_ids.size() >= 2;
    for (int p : l.point_ids) ok = ok && p >= 0 && p < np;
    if (!ok) {
      r.errors.push_back("line L" + std::to_string(li) + " has invalid incidences");
      continue;
    }
    std::vector<Vec3> pts;
    for (int p : l.point_ids) pts.push_back(config.points[p].position);
    auto [a, d] = fit_line(pts);
    anchors[li] = a;
    dirs[li] = d;
    double prev = -1e300, sign = 0;
    bool monotone = true;
    for (size_t k = 0; k < pts.size(); ++k) {
      r.max_residual = std::max(r.max_residual, distance_to_line(pts[k], a, d));
      double t = pts[k].dot(d);
      if (k == 1) sign = t > prev ? 1 : -1;
      if (k >= 1 && !((t - prev) * sign > 0)) monotone = false;
      prev = t;
    }
    if (!monotone) r.errors.push_back("line L" + std::to_string(li) + " points are not ordered along the line");
    for (size_t x = 0; x < l.point_ids.size(); ++x)
      for (size_t y = x + 1; y < l.point_ids.size(); ++y) {
        auto key = std::minmax(l.point_ids[x], l.point_ids[y]);
        auto [it, fresh] = pair_owner.emplace(key, li);
        if (!fresh && it->second != li) shared.insert({it->second, li});
      }
  }
  r.shared_pairs.assign(shared.begin(), shared.end());
  auto val = point_valences(config);
  for (int i = 0; i < np; ++i)
    if (val[i] < 2) r.underused_points.push_back(i);
  int near = 0;
  std::string first;
  for (int li = 0; li < int(config.lines.size()); ++li) {
    const auto& l = config.lines[li];
    if (l.point_ids.size() < 2) continue;
    std::set<int> on(l.point_ids.begin(), l.point_ids.end());
    for (int p = 0; p < np; ++p) {
      if (on.count(p)) continue;
      if (distance_to_line(config.points[p].position, anchors[li], dirs[li]) < warn) {
        if (near < 20)
          r.warnings.push_back("point P" + std::to_string(p) + " lies on line L" + std::to_string(li) +
                               " without incidence");
        ++near;
      }
    }
  }
  if (near > 20) r.warnings.push_back("... " + std::to_string(near - 20) + " more unintended incidences");
  return r;
}

bool is_connected(const GeometricConfiguration& config) {
  const size_t np = config.points.size();
  if (np == 0 && config.lines.empty()) return true;
  DisjointSets ds(np + config.lines.size());
  for (size_t li = 0; li < config.lines.size(); ++li)
    for (int p : config.lines[li].point_ids)
      if (p >= 0 && size_t(p) < np) ds.unite(int(np + li), p);
  int root = ds.find(0);
  for (size_t i = 1; i < np + config.lines.size(); ++i)
    if (ds.find(int(i)) != root) return false;
  return true;
}

LeviGraph levi_graph(const GeometricConfiguration& config) {
  LeviGraph g;
  for (const auto& p : config.points) g.point_vertices.push_back(p.id);
  for (const auto& l : config.lines) {
    g.line_vertices.push_back(l.id);
    for (int p : l.point_ids) g.edges.emplace_back(p, l.id);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

GeometricConfiguration canonicalize(const GeometricConfiguration& config, double eps) {
  const int np = int(config.points.size());
  std::vector<int> order(np);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    const auto& p = config.points[i];
    return std::make_tuple(p.layer, int(p.provenance), std::llround(p.position.x() / eps),
                           std::llround(p.position.y() / eps), std::llround(p.position.z() / eps));
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  std::vector<int> remap(np);
  GeometricConfiguration out;
  out.meta = config.meta;
  for (int k = 0; k < np; ++k) {
    remap[order[k]] = k;
    ConfigPoint p = config.points[order[k]];
    p.id = k;
    out.points.push_back(p);
  }
  for (const auto& l0 : config.lines) {
    ConfigLine l = l0;
    std::vector<Vec3> pts;
    for (int& p : l.point_ids) {
      p = remap[p];
      pts.push_back(out.points[p].position);
    }
    if (pts.size() >= 2) {
      auto [a, d] = fit_line(pts);
      l.anchor = a;
      l.direction = d;
      std::sort(l.point_ids.begin(), l.point_ids.end(), [&](int x, int y) {
        return out.points[x].position.dot(d) < out.points[y].position.dot(d);
      });
    }
    out.lines.push_back(l);
  }
  std::sort(out.lines.begin(), out.lines.end(), [](const ConfigLine& a, const ConfigLine& b) {
    std::vector<int> sa = a.point_ids, sb = b.point_ids;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return std::tie(sa, a.kind) < std::tie(sb, b.kind);
  });
  for (int i = 0; i < int(out.lines.size()); ++i) out.lines[i].id = i;
  return out;
}

}  // namespace platcfg
