#pragma once

#include <cstdint>
#include <vector>

#include "setmart/geom.hpp"
#include "setmart/tree.hpp"

namespace setmart {

/// Set-valued random variable measurable w.r.t. F_level: one convex body per
/// atom, in atom order.
class SetRV {
 public:
  SetRV(int level, std::vector<ConvexBody> bodies);

  int level() const { return level_; }
  int dim() const { return bodies_.front().dim(); }
  std::size_t atom_count() const { return bodies_.size(); }
  const ConvexBody& at(std::size_t atom) const { return bodies_[atom]; }
  const std::vector<ConvexBody>& bodies() const { return bodies_; }

 private:
  int level_;
  std::vector<ConvexBody> bodies_;
};

/// Per-atom finite point sets, before any closure is taken.
struct FiniteSetRV {
  int level = 0;
  int dim = 1;
  std::vector<std::vector<Point>> points;
};

struct SelectionFamily {
  int level = 0;
  int dim = 1;
  std::vector<PointSlice> members;
};

/// Vertex selections: member k picks vertex (k mod count) at every atom.
SelectionFamily castaing_vertices(const SetRV& f);

/// Weighted Minkowski sum of the atom values (the Aumann expectation).
ConvexBody aumann_expectation(const SetRV& f);

/// E[F | F_s] by Minkowski averaging of sibling atoms, level by level.
SetRV cond_expectation_set(const SetRV& f, int s);

/// Largest vertex-choice enumeration the oracle accepts.
inline constexpr std::uint64_t kOracleLimit = 1'000'000;

/// Brute-force E[F | F_s]: conditionally averages every vertex-choice
/// selection of F and takes the convex hull per level-s atom.
SetRV selection_closure_oracle(const SetRV& f, int s);

/// Per atom, the set of member values (the decomposable hull of a finite
/// family on a finite space).
FiniteSetRV decomposable_values(const std::vector<PointSlice>& members);

/// Per-atom convex hull of a finite set-valued variable.
SetRV convexify(const FiniteSetRV& f);

/// decomposable_values followed by convexify.
SetRV decomposable_hull_pointwise(const std::vector<PointSlice>& members);

bool is_selection(const PointSlice& f, const SetRV& set, double tol);

/// Max over atoms of dist(f(A), F(A)).
double selection_gap(const PointSlice& f, const SetRV& set);

}  // namespace setmart
