#include "platcfg/document.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace platcfg {

namespace {

using ojson = nlohmann::ordered_json;

double round15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;
}

void refit(GeometricConfiguration& c) {
  for (auto& l : c.lines) {
    std::vector<Vec3> pts;
    for (int p : l.point_ids) pts.push_back(c.points[p].position);
    if (pts.size() < 2) continue;
    auto [a, d] = fit_line(pts);
    l.anchor = a;
    l.direction = d;
  }
}

template <class T>
T field(const ojson& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

GeometricConfiguration quantized(const GeometricConfiguration& config) {
  GeometricConfiguration c = config;
  for (auto& p : c.points)
    for (int i = 0; i < 3; ++i) p.position[i] = round15(p.position[i]);
  for (auto& s : c.meta.layer_scales) s = round15(s);
  refit(c);
  return c;
}

std::string to_json(const GeometricConfiguration& config) {
  GeometricConfiguration c = quantized(config);
  ojson meta;
  meta["name"] = c.meta.name;
  meta["solid"] = c.meta.solid ? ojson(kind_name(*c.meta.solid)) : ojson(nullptr);
  meta["layer_scales"] = c.meta.layer_scales;
  meta["provenance"] = c.meta.provenance;
  meta["claimed_class"] = c.meta.claimed_class;
  ojson pts = ojson::array();
  for (const auto& p : c.points) {
    ojson jp;
    jp["id"] = p.id;
    jp["xyz"] = {p.position.x(), p.position.y(), p.position.z()};
    jp["provenance"] = provenance_name(p.provenance);
    jp["layer"] = p.layer;
    pts.push_back(jp);
  }
  ojson lines = ojson::array();
  for (const auto& l : c.lines) {
    ojson jl;
    jl["id"] = l.id;
    jl["points"] = l.point_ids;
    jl["kind"] = line_kind_name(l.kind);
    lines.push_back(jl);
  }
  ojson doc;
  doc["meta"] = meta;
  doc["points"] = pts;
  doc["lines"] = lines;
  return doc.dump(1) + "\n";
}

GeometricConfiguration from_json(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("not a JSON document: ") + e.what());
  }
  GeometricConfiguration c;
  const ojson meta = field<ojson>(doc, "meta");
  c.meta.name = field<std::string>(meta, "name");
  const ojson solid = field<ojson>(meta, "solid");
  if (!solid.is_null()) {
    auto k = parse_kind(solid.is_string() ? solid.get<std::string>() : "");
    if (!k) throw DocumentError("unknown solid kind");
    c.meta.solid = k;
  }
  c.meta.layer_scales = field<std::vector<double>>(meta, "layer_scales");
  c.meta.provenance = field<std::string>(meta, "provenance");
  c.meta.claimed_class = field<std::string>(meta, "claimed_class");
  const ojson pts = field<ojson>(doc, "points");
  const ojson lines = field<ojson>(doc, "lines");
  if (!pts.is_array() || !lines.is_array()) throw DocumentError("points and lines must be arrays");
  for (const auto& jp : pts) {
    ConfigPoint p;
    p.id = field<int>(jp, "id");
    auto xyz = field<std::vector<double>>(jp, "xyz");
    if (xyz.size() != 3) throw DocumentError("point P" + std::to_string(p.id) + " needs 3 coordinates");
    p.position = {xyz[0], xyz[1], xyz[2]};
    auto prov = parse_provenance(field<std::string>(jp, "provenance"));
    if (!prov) throw DocumentError("unknown provenance tag");
    p.provenance = *prov;
    p.layer = field<int>(jp, "layer");
    if (p.id != int(c.points.size())) throw DocumentError("point ids must be dense and ordered");
    c.points.push_back(p);
  }
  for (const auto& jl : lines) {
    ConfigLine l;
    l.id = field<int>(jl, "id");
    l.point_ids = field<std::vector<int>>(jl, "points");
    auto kind = parse_line_kind(field<std::string>(jl, "kind"));
    if (!kind) throw DocumentError("unknown line kind");
    l.kind = *kind;
    if (l.id != int(c.lines.size())) throw DocumentError("line ids must be dense and ordered");
    for (int p : l.point_ids)
      if (p < 0 || p >= int(c.points.size()))
        throw DocumentError("line L" + std::to_string(l.id) + " references missing point");
    c.lines.push_back(l);
  }
  refit(c);
  return c;
}

std::string to_levi(const GeometricConfiguration& config) {
  std::ostringstream o;
  for (const auto& [p, l] : levi_graph(config).edges) o << "P" << p << " L" << l << "\n";
  return o.str();
}

std::string to_dot(const GeometricConfiguration& config) {
  std::ostringstream o;
  o << "graph levi {\n";
  for (const auto& p : config.points) o << "  p" << p.id << " [shape=circle];\n";
  for (const auto& l : config.lines) o << "  l" << l.id << " [shape=box];\n";
  for (const auto& [p, l] : levi_graph(config).edges) o << "  p" << p << " -- l" << l << ";\n";
  o << "}\n";
  return o.str();
}

std::string to_obj(const GeometricConfiguration& config) {
  std::ostringstream o;
  char buf[128];
  for (const auto& p : config.points) {
    std::snprintf(buf, sizeof buf, "v %.15g %.15g %.15g\n", p.position.x(), p.position.y(), p.position.z());
    o << buf;
  }
  for (const auto& l : config.lines) {
    o << "l";
    for (int p : l.point_ids) o << " " << p + 1;
    o << "\n";
  }
  return o.str();
}

}  // namespace platcfg
