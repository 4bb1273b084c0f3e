#pragma once

#include "platcfg/builder.hpp"
#include "platcfg/incidence.hpp"
#include "platcfg/symmetry.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace platcfg {

const std::map<std::string, std::string>& embedded_motifs();

// Loads and validates a motif shipped with the library.
Motif load_motif(const std::string& name);

struct Expectation {
  std::optional<ValenceSignature> signature;  // unset for derived counts
  SymmetryClass symmetry = SymmetryClass::Full;
  bool connected = true;
  std::optional<CountSpec> count_spec;  // set for 1-layer builds
  Derivation count_solid = Derivation::None;  // polyhedron the count spec refers to
};

struct CatalogEntry {
  std::string id;
  std::vector<SolidKind> kinds;  // first one is the default
  std::string headline;
  std::string source;
  bool derived_counts = false;
  std::map<SolidKind, Expectation> expected;
  std::function<GeometricConfiguration(SolidKind, double)> build;
};

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& find_entry(const std::string& id);
bool admits(const CatalogEntry& entry, SolidKind kind);
SolidKind resolve_kind(const CatalogEntry& entry, std::optional<SolidKind> kind);

GeometricConfiguration build(const std::string& id, std::optional<SolidKind> kind = std::nullopt,
                             double eps = kEps);
Expectation expected(const std::string& id, std::optional<SolidKind> kind = std::nullopt);
std::string kinds_text(const CatalogEntry& entry);
// Parameters of the polyhedron the count spec of an expectation refers to.
SolidParams count_params(SolidKind kind, const Expectation& exp);

// Derived-count baselines observed on verified builds.
std::optional<ValenceSignature> baseline(const std::string& id, SolidKind kind);

}  // namespace platcfg
