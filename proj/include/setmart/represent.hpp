#pragma once

#include <vector>

#include "setmart/integral.hpp"
#include "setmart/process.hpp"

namespace setmart {

enum class Provenance { kBackward, kCastaing, kForward };

/// One martingale selector f_{r,.}^k: equal to the k-th Castaing member of
/// F_r at level r, its conditional expectation below r, and a forward-solved
/// martingale extension inside F_t above r.
struct Selector {
  int r = 0;
  std::size_t k = 0;
  PointProcess path;

  Provenance provenance(int t) const {
    return t < r ? Provenance::kBackward : (t == r ? Provenance::kCastaing : Provenance::kForward);
  }
};

struct SelectorSystem {
  std::vector<Selector> selectors;
};

struct HypothesisViolation {
  int t = 0;           // level of the Castaing member
  std::size_t k = 0;   // member index
  int s = 0;           // conditioning level
  std::size_t atom = 0;
  double gap = 0.0;
};

struct HypothesisReport {
  bool initial_zero = false;
  double initial_gap = 0.0;
  bool castaing_ok = true;
  std::size_t violation_count = 0;
  HypothesisViolation worst;
  /// First violations in scan order, capped.
  std::vector<HypothesisViolation> violations;

  bool passed() const { return initial_zero && castaing_ok; }
};

/// Checks that (a) F_0 = {0} and (b) E[f_t^k | F_s] is a selection of F_s
/// for every Castaing member f_t^k (the process's attached family, or vertex
/// selections) and every s < t.
HypothesisReport check_representation_hypothesis(const SetProcess& f, double tol);

/// Builds the selector system of a (sub)martingale; duplicates (node-wise
/// within 1e-12) are dropped. Throws NotASubmartingale, or ForwardInfeasible
/// naming the node where no forward extension exists.
SelectorSystem build_selector_system(const SetProcess& f, double tol = 1e-9);

/// Exact binary-tree martingale representation: x = f_0 and
/// phi(node) = (f(up) - f(down)) / (2 sqrt(dt)).
ExtendedIntegrand discrete_mrt(const ScenarioTree& tree, const PointProcess& f, double tol);

struct Reconstruction {
  IntegrandFamily family;
  std::size_t selector_count = 0;
  /// Hausdorff distance between the input and gset_integral(family), per
  /// node in flat order.
  std::vector<double> node_gaps;
  double max_gap = 0.0;
  int worst_level = 0;
  std::size_t worst_node = 0;
};

/// Trivial-initial submartingale F = int_0^t G dB. Throws HypothesisViolated
/// when check_representation_hypothesis fails.
Reconstruction reconstruct_gset(const SetProcess& f, double tol);

/// Martingale selectors E[f_N^k | F_t] generated by the terminal Castaing
/// family. Throws NotAMartingale or SelectorEscape.
std::vector<PointProcess> martingale_selector_family(const SetProcess& m, double tol);

/// Martingale with arbitrary initial value: M_t = x + int G dB over
/// the family built from its martingale selectors.
Reconstruction reconstruct_extended(const SetProcess& m, double tol);

/// Submartingale with arbitrary initial value, keeping x^f = f_0.
Reconstruction reconstruct_submartingale_extended(const SetProcess& f, double tol);

/// Node-wise Hausdorff gaps between f and gset_integral(g).
Reconstruction measure_reconstruction(const SetProcess& f, IntegrandFamily g);

}  // namespace setmart
