#include "setmart/lp.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "setmart/error.hpp"

namespace setmart {

namespace {

constexpr double kPivotTol = 1e-12;

// Dense tableau for min sum(artificials) s.t. [A I][x; s] = b, b >= 0.
class PhaseOneTableau {
 public:
  explicit PhaseOneTableau(const FeasibilityProblem& p)
      : rows_(p.rows), cols_(p.cols), width_(p.cols + p.rows + 1), cells_((p.rows + 1) * width_, 0.0),
        basis_(p.rows) {
    for (std::size_t r = 0; r < rows_; ++r) {
      const double sign = p.b[r] < 0.0 ? -1.0 : 1.0;
      for (std::size_t c = 0; c < cols_; ++c) cell(r, c) = sign * p.coeff(r, c);
      cell(r, cols_ + r) = 1.0;
      cell(r, rhs()) = sign * p.b[r];
      basis_[r] = cols_ + r;
    }
    // Objective row holds reduced costs of the phase-I objective.
    for (std::size_t c = 0; c < width_; ++c) {
      if (c >= cols_ && c < cols_ + rows_) continue;
      double sum = 0.0;
      for (std::size_t r = 0; r < rows_; ++r) sum += cell(r, c);
      cell(rows_, c) = -sum;
    }
  }

  // Runs to optimality; returns the phase-I objective value.
  double solve() {
    const std::size_t n = cols_ + rows_;
    const std::size_t stall_limit = 10 * n;
    const std::size_t hard_limit = 1000 * n;
    std::size_t stalled = 0;
    for (std::size_t iter = 0;; ++iter) {
      if (iter > hard_limit || stalled > stall_limit) {
        throw Error(ErrorCode::kNumericalBreakdown, "phase-I simplex made no progress");
      }
      // Bland: lowest-index improving column.
      std::size_t enter = n;
      for (std::size_t c = 0; c < n; ++c) {
        if (cell(rows_, c) < -kPivotTol) {
          enter = c;
          break;
        }
      }
      if (enter == n) break;
      // Ratio test; ties go to the lowest basic index.
      std::size_t leave = rows_;
      double best = 0.0;
      for (std::size_t r = 0; r < rows_; ++r) {
        const double coef = cell(r, enter);
        if (coef <= kPivotTol) continue;
        const double ratio = cell(r, rhs()) / coef;
        if (leave == rows_ || ratio < best - kPivotTol ||
            (std::abs(ratio - best) <= kPivotTol && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      // Phase-I is bounded below by zero, so an entering column always has
      // a positive entry unless rounding has corrupted the tableau.
      if (leave == rows_) throw Error(ErrorCode::kNumericalBreakdown, "unbounded phase-I column");
      const double before = objective();
      pivot(leave, enter);
      stalled = objective() < before - kPivotTol ? 0 : stalled + 1;
    }
    return objective();
  }

  std::vector<double> solution() const {
    std::vector<double> x(cols_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < cols_) x[basis_[r]] = std::max(0.0, cell(r, rhs()));
    }
    return x;
  }

 private:
  std::size_t rhs() const { return width_ - 1; }
  double& cell(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  double cell(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }
  double objective() const { return -cell(rows_, rhs()); }

  void pivot(std::size_t row, std::size_t col) {
    const double inv = 1.0 / cell(row, col);
    for (std::size_t c = 0; c < width_; ++c) cell(row, c) *= inv;
    cell(row, col) = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == row) continue;
      const double factor = cell(r, col);
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c < width_; ++c) cell(r, c) -= factor * cell(row, c);
      cell(r, col) = 0.0;
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t width_;
  std::vector<double> cells_;
  std::vector<std::size_t> basis_;
};

double residual_inf(const FeasibilityProblem& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (std::size_t r = 0; r < p.rows; ++r) {
    double sum = -p.b[r];
    for (std::size_t c = 0; c < p.cols; ++c) sum += p.coeff(r, c) * x[c];
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

}  // namespace

FeasibilityProblem make_problem(std::size_t rows, std::size_t cols) {
  return {rows, cols, std::vector<double>(rows * cols, 0.0), std::vector<double>(rows, 0.0)};
}

std::optional<std::vector<double>> phase1_feasible(const FeasibilityProblem& p, double tol) {
  if (p.a.size() != p.rows * p.cols || p.b.size() != p.rows || p.cols == 0) {
    throw Error(ErrorCode::kInvalidParams, "malformed feasibility problem");
  }
  for (double v : p.a) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidParams, "non-finite matrix entry");
  }
  for (double v : p.b) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidParams, "non-finite right-hand side");
  }
  PhaseOneTableau tableau(p);
  if (tableau.solve() > tol) return std::nullopt;
  auto x = tableau.solution();
  if (residual_inf(p, x) > tol) return std::nullopt;
  return x;
}

std::optional<std::vector<Point>> match_conditional_average(std::span<const ConvexBody> bodies,
                                                            std::span<const double> weights, Point target,
                                                            double tol) {
  if (bodies.empty() || bodies.size() != weights.size()) {
    throw Error(ErrorCode::kInvalidParams, "one positive weight per body required");
  }
  const int dim = bodies[0].dim();
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    if (bodies[i].dim() != dim) throw Error(ErrorCode::kDimensionMismatch, "bodies differ in dimension");
    if (!(weights[i] > 0.0)) throw Error(ErrorCode::kInvalidParams, "weights must be positive");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorCode::kInvalidParams, "weights must sum to 1");

  std::size_t cols = 0;
  for (const auto& body : bodies) cols += body.vertex_count();
  const auto d = static_cast<std::size_t>(dim);
  FeasibilityProblem p = make_problem(d + bodies.size(), cols);
  p.b[0] = target.x;
  if (dim == 2) p.b[1] = target.y;
  std::size_t col = 0;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    for (const Point& v : bodies[i].vertices()) {
      p.coeff(0, col) = weights[i] * v.x;
      if (dim == 2) p.coeff(1, col) = weights[i] * v.y;
      p.coeff(d + i, col) = 1.0;
      ++col;
    }
    p.b[d + i] = 1.0;
  }

  const auto lambda = phase1_feasible(p, tol);
  if (!lambda) return std::nullopt;

  std::vector<Point> points;
  points.reserve(bodies.size());
  col = 0;
  for (const auto& body : bodies) {
    Point x{};
    double mass = 0.0;
    for (const Point& v : body.vertices()) {
      x += (*lambda)[col] * v;
      mass += (*lambda)[col];
      ++col;
    }
    points.push_back((1.0 / mass) * x);
  }
  return points;
}

}  // namespace setmart
