#include "platcfg/catalog.hpp"
#include "platcfg/document.hpp"
#include "platcfg/symmetry.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace platcfg;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SolidKind kind_arg(const std::string& s) {
  auto k = parse_kind(s);
  if (!k) throw UsageError("unknown solid '" + s + "'");
  return *k;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

GeometricConfiguration load(const std::string& path) {
  std::string text = read_file(path);
  try {
    return from_json(text);
  } catch (const DocumentError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

bool class_meets(SymmetryClass got, const std::string& mode, const std::string& claimed) {
  if (mode == "full") return got == SymmetryClass::Full;
  if (mode == "rotational") return got != SymmetryClass::Neither;
  auto want = parse_class(claimed);
  if (!want) return true;
  return got == *want;
}

int cmd_list() {
  for (const auto& e : catalog()) std::cout << e.id << "  " << kinds_text(e) << "  " << e.headline << "\n";
  return 0;
}

int cmd_build(const std::string& entry, const std::string& solid, const std::string& out, double eps) {
  std::optional<SolidKind> kind;
  if (!solid.empty()) kind = kind_arg(solid);
  GeometricConfiguration c;
  try {
    c = build(entry, kind, eps);
  } catch (const CatalogError& e) {
    throw UsageError(e.what());
  }
  write_out(out, to_json(c));
  auto report = verify_axioms(c, eps);
  std::ostream& log = out.empty() || out == "-" ? std::cerr : std::cout;
  log << entry << " on " << kind_name(*c.meta.solid) << ": " << format_signature(census(c)) << "\n"
      << report.text() << "connected: " << (is_connected(c) ? "yes" : "no") << "\n";
  return report.passes() ? 0 : 1;
}

int cmd_verify(const std::string& file, const std::string& solid, const std::string& mode, double eps) {
  GeometricConfiguration c = load(file);
  std::optional<SolidKind> kind = c.meta.solid;
  if (!solid.empty()) kind = kind_arg(solid);
  auto report = verify_axioms(c, eps);
  std::cout << report.text();
  bool ok = report.passes();
  if (kind) {
    SymmetryClass cls = classify(c, *kind, eps);
    bool meets = class_meets(cls, mode, c.meta.claimed_class);
    std::cout << "symmetry (" << kind_name(*kind) << "): " << class_name(cls) << "\n";
    std::cout << "mode " << mode << ": " << (meets ? "PASS" : "FAIL") << "\n";
    ok = ok && meets;
  } else if (mode != "auto") {
    throw UsageError("no solid given for symmetry check");
  }
  return ok ? 0 : 1;
}

int cmd_census(const std::string& file) {
  GeometricConfiguration c;
  if (read_file(file).find_first_not_of(" \t\r\n") != std::string::npos) c = load(file);
  if (c.points.empty() && c.lines.empty()) std::cerr << "warning: empty configuration\n";
  std::cout << format_signature(census(c)) << "\n";
  return 0;
}

int cmd_export(const std::string& file, const std::string& format, const std::string& out) {
  GeometricConfiguration c = load(file);
  std::string text;
  if (format == "json") text = to_json(c);
  else if (format == "levi") text = to_levi(c);
  else if (format == "dot") text = to_dot(c);
  else if (format == "obj") text = to_obj(c);
  else throw UsageError("unknown format '" + format + "'");
  write_out(out, text);
  return 0;
}

int cmd_predict(const std::string& solid, const CountSpec& spec) {
  auto [p, l] = predict_counts(table_params(kind_arg(solid)), spec);
  std::cout << "p=" << p << " l=" << l << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Platonic point-line configurations"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list catalog entries");

  std::string entry, solid, out, file, mode = "auto", format;
  double eps = kEps;
  auto* b = app.add_subcommand("build", "build a catalog entry and write its JSON document");
  b->add_option("entry", entry)->required();
  b->add_option("--solid", solid);
  b->add_option("--out", out);
  b->add_option("--eps", eps);

  auto* v = app.add_subcommand("verify", "check axioms and symmetry of a document");
  v->add_option("file", file)->required();
  v->add_option("--solid", solid);
  v->add_option("--mode", mode)->check(CLI::IsMember({"full", "rotational", "auto"}));
  v->add_option("--eps", eps);

  auto* c = app.add_subcommand("census", "print the valence signature of a document");
  c->add_option("file", file)->required();

  auto* e = app.add_subcommand("export", "convert a document");
  e->add_option("file", file)->required();
  e->add_option("--format", format)->required();
  e->add_option("--out", out);

  CountSpec spec;
  auto* p = app.add_subcommand("predict", "point and line counts of a one-layer build");
  p->add_option("--solid", solid)->required();
  p->add_option("--x", spec.x);
  p->add_option("--y", spec.y);
  p->add_option("--z", spec.z);
  p->add_option("--u", spec.u);
  p->add_option("--vv", spec.vv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*list) return cmd_list();
    if (*b) return cmd_build(entry, solid, out, eps);
    if (*v) return cmd_verify(file, solid, mode, eps);
    if (*c) return cmd_census(file);
    if (*e) return cmd_export(file, format, out);
    if (*p) return cmd_predict(solid, spec);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 2;
}
