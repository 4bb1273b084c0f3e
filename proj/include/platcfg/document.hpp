#pragma once

#include "platcfg/incidence.hpp"

#include <stdexcept>
#include <string>

namespace platcfg {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rounds coordinates to the 15 significant digits the document stores and
// refits line supports, so a saved and reloaded configuration is identical.
GeometricConfiguration quantized(const GeometricConfiguration& config);

std::string to_json(const GeometricConfiguration& config);
GeometricConfiguration from_json(const std::string& text);  // throws DocumentError

std::string to_levi(const GeometricConfiguration& config);
std::string to_dot(const GeometricConfiguration& config);
std::string to_obj(const GeometricConfiguration& config);

}  // namespace platcfg
