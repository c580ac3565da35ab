// Random instance generators shared by the unit and acceptance suites.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "setmart/geom.hpp"
#include "setmart/integral.hpp"
#include "setmart/randset.hpp"
#include "setmart/tree.hpp"

namespace setmart::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Point random_point(Rng& rng, int dim, double spread) {
  return {uniform(rng, -spread, spread), dim == 2 ? uniform(rng, -spread, spread) : 0.0};
}

/// Hull of 1..max_points random points around a random center.
inline ConvexBody random_body(Rng& rng, int dim, int max_points = 6, double spread = 1.0) {
  const Point center = random_point(rng, dim, 2.0);
  const int n = uniform_int(rng, 1, max_points);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back(center + random_point(rng, dim, spread));
  return hull(pts, dim);
}

/// Full-dimensional body (at least a proper interval or triangle).
inline ConvexBody random_solid_body(Rng& rng, int dim, int max_points = 6, double spread = 1.0) {
  for (;;) {
    ConvexBody b = random_body(rng, dim, std::max(max_points, 3), spread);
    if (b.vertex_count() >= static_cast<std::size_t>(dim + 1)) return b;
  }
}

inline SetRV random_setrv(Rng& rng, int level, int dim, int max_points = 4) {
  std::vector<ConvexBody> bodies;
  for (std::size_t a = 0; a < ScenarioTree::width(level); ++a) bodies.push_back(random_body(rng, dim, max_points));
  return SetRV(level, std::move(bodies));
}

inline Integrand random_integrand(Rng& rng, int depth, int dim, double spread = 2.0) {
  Integrand phi(depth, dim);
  for (int t = 0; t < depth; ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) phi.at(t, j) = random_point(rng, dim, spread);
  }
  return phi;
}

inline IntegrandFamily random_family(Rng& rng, int depth, int dim, int size, bool zero_initial) {
  IntegrandFamily g;
  for (int i = 0; i < size; ++i) {
    g.push_back({zero_initial ? Point{} : random_point(rng, dim, 1.5), random_integrand(rng, depth, dim)});
  }
  return g;
}

/// Martingale generated by random terminal values.
inline PointProcess random_point_martingale(Rng& rng, int depth, int dim, double spread = 3.0) {
  PointSlice terminal{depth, dim, {}};
  for (std::size_t j = 0; j < ScenarioTree::width(depth); ++j) terminal.values.push_back(random_point(rng, dim, spread));
  return martingale_from_terminal(terminal);
}

}  // namespace setmart::testing
