#pragma once

#include <cstddef>
#include <vector>

#include "setmart/point.hpp"

namespace setmart {

/// Values of an adapted R^d-valued process on a single tree level,
/// indexed by node position 0 <= j < 2^level.
struct PointSlice {
  int level = 0;
  int dim = 1;
  std::vector<Point> values;
};

/// Adapted R^d-valued process over levels 0..depth. Node (t, j) is stored at
/// flat position 2^t - 1 + j.
class PointProcess {
 public:
  PointProcess() = default;
  PointProcess(int depth, int dim);

  int depth() const { return depth_; }
  int dim() const { return dim_; }

  Point& at(int level, std::size_t j);
  Point at(int level, std::size_t j) const;

  PointSlice slice(int level) const;
  void set_slice(const PointSlice& slice);

  const std::vector<Point>& flat() const { return values_; }
  std::vector<Point>& flat() { return values_; }

 private:
  int depth_ = 0;
  int dim_ = 1;
  std::vector<Point> values_;
};

/// alpha * x + beta * y, node-wise.
PointProcess combine(double alpha, const PointProcess& x, double beta, const PointProcess& y);

/// Max node-wise Euclidean distance between two processes of equal shape.
double max_node_distance(const PointProcess& a, const PointProcess& b);

/// The sigma-algebra F_t as a partition of the leaves: atom j at level t is
/// the set of leaves below node (t, j).
struct AtomPartition {
  int level = 0;
  int depth = 0;

  std::size_t size() const { return std::size_t{1} << level; }
  double weight() const;
  /// Index range [first, last) of the descendants of `atom` at level `t`.
  std::size_t first_descendant(std::size_t atom, int t) const { return atom << (t - level); }
  std::size_t last_descendant(std::size_t atom, int t) const { return (atom + 1) << (t - level); }
};

/// Depth-N binary scenario tree discretizing a scalar Brownian motion on
/// [0, T]. Child c of node (t, i) is (t + 1, 2i + c); c = 0 moves up by
/// sqrt(dt), c = 1 moves down. All paths carry probability 2^-N.
class ScenarioTree {
 public:
  static constexpr int kMaxDepth = 20;

  ScenarioTree(int depth, double horizon);

  int depth() const { return depth_; }
  double horizon() const { return horizon_; }
  double dt() const { return horizon_ / depth_; }
  double step() const { return step_; }

  static std::size_t width(int level) { return std::size_t{1} << level; }
  static std::size_t flat_index(int level, std::size_t j) { return (std::size_t{1} << level) - 1 + j; }
  std::size_t node_count() const { return (std::size_t{1} << (depth_ + 1)) - 1; }

  double probability(int level) const;
  double time(int level) const { return level * dt(); }
  double brownian(int level, std::size_t j) const;
  /// Increment on the edge into node (level, j), level >= 1.
  double increment(std::size_t j) const { return (j & 1U) == 0 ? step_ : -step_; }

  AtomPartition atoms_at(int level) const;
  PointProcess brownian_process() const;

  void check_level(int level) const;

 private:
  int depth_;
  double horizon_;
  double step_;
};

ScenarioTree build_tree(int depth, double horizon);

/// E[X_t | F_s] for a level-t slice; the result lives on level s. Averages
/// sibling pairs level by level, so the tower property holds exactly.
PointSlice cond_expect(const PointSlice& x, int s);

PointSlice cond_expect_point(const PointProcess& x, int t, int s);

/// True iff each non-terminal node equals the mean of its two children
/// within `tol` (Euclidean).
bool is_point_martingale(const PointProcess& f, double tol);

/// Largest one-step martingale defect over all non-terminal nodes.
double martingale_defect(const PointProcess& f);

/// Martingale f_t = E[f_N | F_t] generated by a terminal slice.
PointProcess martingale_from_terminal(const PointSlice& terminal);

}  // namespace setmart
