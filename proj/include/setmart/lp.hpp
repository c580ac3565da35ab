#pragma once

#include <optional>
#include <span>
#include <vector>

#include "setmart/geom.hpp"

namespace setmart {

/// Equality-constrained feasibility problem {x >= 0 : A x = b}, row-major.
struct FeasibilityProblem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // rows * cols
  std::vector<double> b;  // rows

  double& coeff(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  double coeff(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

FeasibilityProblem make_problem(std::size_t rows, std::size_t cols);

/// Phase-I simplex with Bland's rule. Returns x >= 0 with |Ax - b|_inf <= tol,
/// or nullopt when the phase-I optimum exceeds tol. Throws NumericalBreakdown
/// when pivoting stalls.
std::optional<std::vector<double>> phase1_feasible(const FeasibilityProblem& p, double tol = 1e-9);

/// Finds x_i in bodies[i] with sum_i w_i x_i = target, each x_i written as a
/// convex combination of its body's vertices. nullopt means the target is not
/// in the Minkowski combination of the bodies.
std::optional<std::vector<Point>> match_conditional_average(std::span<const ConvexBody> bodies,
                                                            std::span<const double> weights, Point target,
                                                            double tol = 1e-9);

}  // namespace setmart
