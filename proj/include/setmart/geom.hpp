#pragma once

#include <optional>
#include <span>
#include <vector>

#include "setmart/point.hpp"

namespace setmart {

/// Distance below which points coincide and a vertex counts as collinear
/// with its neighbours during canonicalization.
inline constexpr double kCanonicalTol = 1e-12;

/// Nonempty compact convex subset of R^d, d in {1, 2}.
///
/// d == 1: vertices are {lo, hi} on the x-axis ({lo} for a singleton).
/// d == 2: extreme points in counter-clockwise order starting from the
/// lexicographically smallest one. A segment has two vertices, a singleton
/// one. Construction always goes through `hull`, so every instance is
/// canonical.
class ConvexBody {
 public:
  static ConvexBody interval(double lo, double hi);
  static ConvexBody singleton(Point p, int dim);

  int dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  bool is_singleton() const { return vertices_.size() == 1; }

  // d == 1 only.
  double lo() const { return vertices_.front().x; }
  double hi() const { return vertices_.back().x; }

  friend bool operator==(const ConvexBody&, const ConvexBody&) = default;

 private:
  friend ConvexBody hull(std::span<const Point> points, int dim);
  ConvexBody(int dim, std::vector<Point> vertices) : dim_(dim), vertices_(std::move(vertices)) {}

  int dim_ = 1;
  std::vector<Point> vertices_;
};

ConvexBody hull(std::span<const Point> points, int dim);

double support(const ConvexBody& c, Point u);
double width(const ConvexBody& c, Point u);
/// sup{|x| : x in C}.
double body_norm(const ConvexBody& c);

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);
ConvexBody scale(const ConvexBody& c, double a);
ConvexBody translate(const ConvexBody& c, Point offset);

/// Minkowski combination sum_i w_i C_i.
ConvexBody weighted_sum(std::span<const ConvexBody> bodies, std::span<const double> weights);

/// Euclidean distance from a point to the body (0 inside).
double point_distance(const ConvexBody& c, Point p);
bool contains_point(const ConvexBody& c, Point p, double tol);

double hausdorff(const ConvexBody& a, const ConvexBody& b);

/// max over vertices of B of dist(v, A): zero iff B is inside A.
double excess(const ConvexBody& b, const ConvexBody& a);

/// B inside A dilated by tol.
bool contains(const ConvexBody& a, const ConvexBody& b, double tol);

/// The unique C with C + B = A, or nullopt when it does not exist. The
/// planar case erodes A by B over the combined normal fan, then accepts the
/// result only if re-adding B reproduces A within `tol`.
std::optional<ConvexBody> hukuhara_diff(const ConvexBody& a, const ConvexBody& b, double tol);

Point steiner_point(const ConvexBody& c);

/// Fixed probe directions for width scans: 16 equally spaced unit vectors in
/// the plane, or +-1 on the line.
std::vector<Point> probe_directions(int dim);

}  // namespace setmart
