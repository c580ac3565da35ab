#pragma once

#include <optional>
#include <string>
#include <vector>

#include "setmart/randset.hpp"
#include "setmart/tree.hpp"

namespace setmart {

/// Adapted convex-set-valued process: one SetRV per level 0..N.
///
/// A process may carry a Castaing family: point processes whose per-node
/// convex hull equals the process. Processes built from generators (integral
/// families, decomposable hulls) record them here; consumers that need a
/// Castaing representation use it in place of vertex selections.
class SetProcess {
 public:
  SetProcess(const ScenarioTree& tree, std::vector<SetRV> levels);

  const ScenarioTree& tree() const { return tree_; }
  int depth() const { return tree_.depth(); }
  int dim() const { return levels_.front().dim(); }
  const SetRV& level(int t) const { return levels_.at(static_cast<std::size_t>(t)); }
  const std::vector<SetRV>& levels() const { return levels_; }
  const ConvexBody& body(int t, std::size_t j) const { return level(t).at(j); }

  const std::vector<PointProcess>& castaing() const { return castaing_; }
  bool has_castaing() const { return !castaing_.empty(); }
  /// Attaches a Castaing family; throws if a member leaves the process by
  /// more than `tol` or the family's hull misses a vertex by more than `tol`.
  void set_castaing(std::vector<PointProcess> family, double tol = 1e-9);
  void clear_castaing() { castaing_.clear(); }

  /// The Castaing family restricted to level t: the attached family if
  /// present, vertex selections otherwise.
  std::vector<PointSlice> castaing_at(int t) const;

 private:
  ScenarioTree tree_;
  std::vector<SetRV> levels_;
  std::vector<PointProcess> castaing_;
};

/// Builds a process whose value at each node is the hull of the given paths
/// at that node. The paths become the process's Castaing family.
SetProcess hull_process(const ScenarioTree& tree, const std::vector<PointProcess>& paths);

/// Node-wise Minkowski sum with a fixed body.
SetProcess add_body(const SetProcess& f, const ConvexBody& c);

/// C + {m_t}: the translation-type martingale built from a point process.
SetProcess translate_process(const ScenarioTree& tree, const ConvexBody& c, const PointProcess& m);

double max_node_hausdorff(const SetProcess& a, const SetProcess& b);

enum class Verdict { kMartingale, kSubmartingale, kSupermartingale, kNone };

std::string to_string(Verdict v);

struct NodeGap {
  int s = 0;
  int t = 0;
  std::size_t atom = 0;
  double gap = 0.0;
};

struct ClassifyReport {
  Verdict verdict = Verdict::kNone;
  /// Worst Hausdorff gap between E[F_t | F_s] and F_s over all pairs.
  NodeGap worst;
  /// Largest distance of a vertex of F_s outside E[F_t | F_s].
  NodeGap worst_sub;
  /// Largest distance of a vertex of E[F_t | F_s] outside F_s.
  NodeGap worst_super;
};

/// Checks every pair s < t and every level-s atom.
ClassifyReport classify(const SetProcess& f, double tol);

struct DegeneracyReport {
  bool singleton_initial = false;
  /// Max width over nodes and probe directions; only computed when the
  /// initial value is a singleton.
  double max_width = 0.0;
  bool degenerate = false;
  std::string note;
};

DegeneracyReport degeneracy_check(const SetProcess& f, double tol);

struct SteinerDecomposition {
  bool translation_structure = false;
  PointProcess steiner;  // m_t = steiner_point(M_t)
  ConvexBody body;       // M_0 - m_0
  double max_gap = 0.0;
  int worst_level = 0;
  std::size_t worst_node = 0;
};

/// Splits a martingale as M_t = C + {m_t} via Steiner points.
/// `translation_structure` is false when some node misses C + {m_t} by more
/// than tol.
SteinerDecomposition steiner_decomposition(const SetProcess& m, double tol);

}  // namespace setmart
