#pragma once

#include "platcfg/builder.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace platcfg::testing {

// Cyclic motif with edge anchors at t and 1-t on every side and a rotated
// interior point per side; each anchor is joined to one interior point.
inline Motif random_motif(int m, std::mt19937& rng) {
  std::uniform_real_distribution<double> ut(0.08, 0.42), ur(0.15, 0.6), ua(0, 2 * std::numbers::pi);
  double t = ut(rng), r = ur(rng), a = ua(rng);
  Motif motif;
  motif.name = "fuzz";
  motif.m = m;
  auto corner = [&](int i) { return reference_corner(m, i % m); };
  for (int k = 0; k < m; ++k) {
    for (double s : {t, 1 - t})
      motif.points.push_back({(1 - s) * corner(k) + s * corner(k + 1), Anchor::edge(k, s)});
  }
  for (int k = 0; k < m; ++k) {
    double ang = a + 2 * std::numbers::pi * k / m;
    motif.points.push_back({r * Vec2(std::cos(ang), std::sin(ang)), Anchor::interior()});
  }
  for (int k = 0; k < m; ++k) {
    motif.lines.push_back({2 * k, 2 * m + k});
    motif.lines.push_back({2 * k + 1, 2 * m + (k + 1) % m});
  }
  return motif;
}

}  // namespace platcfg::testing
