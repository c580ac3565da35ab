#pragma once

#include <vector>

#include "setmart/process.hpp"
#include "setmart/tree.hpp"

namespace setmart {

/// Predictable R^d-valued integrand: one value per non-terminal node, used
/// for the step from that node into its children.
class Integrand {
 public:
  Integrand() = default;
  Integrand(int depth, int dim);

  /// Integrand with the same value at every node.
  static Integrand constant(int depth, Point value, int dim);

  int depth() const { return depth_; }
  int dim() const { return dim_; }
  Point& at(int level, std::size_t j);
  Point at(int level, std::size_t j) const;
  const std::vector<Point>& flat() const { return values_; }

 private:
  int depth_ = 0;
  int dim_ = 1;
  std::vector<Point> values_;
};

/// (x, phi): initial point plus integrand.
struct ExtendedIntegrand {
  Point x;
  Integrand phi;
};

using IntegrandFamily = std::vector<ExtendedIntegrand>;

/// f_0 = 0, f(child) = f(node) + phi(node) * dB(child).
PointProcess ito_integral(const ScenarioTree& tree, const Integrand& phi);

/// x + ito_integral(phi).
PointProcess extended_path(const ScenarioTree& tree, const ExtendedIntegrand& e);

std::vector<PointProcess> extended_paths(const ScenarioTree& tree, const IntegrandFamily& g);

/// F_t(A) = hull{extended_path(e)(t, A) : e in G}. The paths are attached as
/// the result's Castaing family.
SetProcess gset_integral(const ScenarioTree& tree, const IntegrandFamily& g);

/// Raw per-node value sets {extended_path(e)(t, A) : e in G}, before the
/// convex closure; one FiniteSetRV per level.
std::vector<FiniteSetRV> gset_values(const ScenarioTree& tree, const IntegrandFamily& g);

struct SubmartingaleCheck {
  bool holds = false;
  ClassifyReport report;
};

/// classify(gset_integral(G)) is Martingale or Submartingale at `tol`.
SubmartingaleCheck integral_is_submartingale(const ScenarioTree& tree, const IntegrandFamily& g, double tol);

}  // namespace setmart
