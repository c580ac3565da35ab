#include "setmart/tree.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "setmart/error.hpp"

namespace setmart {

namespace {

void check_dim(int dim) {
  if (dim != 1 && dim != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "dimension must be 1 or 2, got " + std::to_string(dim));
  }
}

}  // namespace

PointProcess::PointProcess(int depth, int dim) : depth_(depth), dim_(dim) {
  check_dim(dim);
  if (depth < 0 || depth > ScenarioTree::kMaxDepth) {
    throw Error(ErrorCode::kInvalidParams, "process depth out of range");
  }
  values_.assign((std::size_t{1} << (depth + 1)) - 1, Point{});
}

Point& PointProcess::at(int level, std::size_t j) { return values_[ScenarioTree::flat_index(level, j)]; }

Point PointProcess::at(int level, std::size_t j) const {
  return values_[ScenarioTree::flat_index(level, j)];
}

PointSlice PointProcess::slice(int level) const {
  if (level < 0 || level > depth_) {
    throw Error(ErrorCode::kLevelOutOfRange, "level " + std::to_string(level));
  }
  const auto first = values_.begin() + static_cast<std::ptrdiff_t>(ScenarioTree::flat_index(level, 0));
  return {level, dim_, std::vector<Point>(first, first + static_cast<std::ptrdiff_t>(ScenarioTree::width(level)))};
}

void PointProcess::set_slice(const PointSlice& slice) {
  if (slice.level < 0 || slice.level > depth_) {
    throw Error(ErrorCode::kLevelOutOfRange, "level " + std::to_string(slice.level));
  }
  if (slice.dim != dim_ || slice.values.size() != ScenarioTree::width(slice.level)) {
    throw Error(ErrorCode::kDimensionMismatch, "slice shape does not match process");
  }
  std::copy(slice.values.begin(), slice.values.end(),
            values_.begin() + static_cast<std::ptrdiff_t>(ScenarioTree::flat_index(slice.level, 0)));
}

PointProcess combine(double alpha, const PointProcess& x, double beta, const PointProcess& y) {
  if (x.depth() != y.depth() || x.dim() != y.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "combine: processes differ in shape");
  }
  PointProcess out(x.depth(), x.dim());
  for (std::size_t i = 0; i < out.flat().size(); ++i) {
    out.flat()[i] = alpha * x.flat()[i] + beta * y.flat()[i];
  }
  return out;
}

double max_node_distance(const PointProcess& a, const PointProcess& b) {
  if (a.depth() != b.depth() || a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "processes differ in shape");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.flat().size(); ++i) {
    worst = std::max(worst, distance(a.flat()[i], b.flat()[i]));
  }
  return worst;
}

double AtomPartition::weight() const { return std::ldexp(1.0, -level); }

ScenarioTree::ScenarioTree(int depth, double horizon) : depth_(depth), horizon_(horizon), step_(0.0) {
  if (depth < 1 || depth > kMaxDepth) {
    throw Error(ErrorCode::kInvalidParams, "depth must lie in [1, 20], got " + std::to_string(depth));
  }
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw Error(ErrorCode::kInvalidParams, "horizon must be positive and finite");
  }
  step_ = std::sqrt(horizon_ / depth_);
}

double ScenarioTree::probability(int level) const {
  check_level(level);
  return std::ldexp(1.0, -level);
}

double ScenarioTree::brownian(int level, std::size_t j) const {
  const int downs = std::popcount(j);
  return step_ * static_cast<double>(level - 2 * downs);
}

AtomPartition ScenarioTree::atoms_at(int level) const {
  check_level(level);
  return {level, depth_};
}

PointProcess ScenarioTree::brownian_process() const {
  PointProcess b(depth_, 1);
  for (int t = 0; t <= depth_; ++t) {
    for (std::size_t j = 0; j < width(t); ++j) b.at(t, j) = {brownian(t, j), 0.0};
  }
  return b;
}

void ScenarioTree::check_level(int level) const {
  if (level < 0 || level > depth_) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "level " + std::to_string(level) + " outside [0, " + std::to_string(depth_) + "]");
  }
}

ScenarioTree build_tree(int depth, double horizon) { return ScenarioTree(depth, horizon); }

PointSlice cond_expect(const PointSlice& x, int s) {
  if (s < 0 || s > x.level) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "cannot condition level " + std::to_string(x.level) + " on level " + std::to_string(s));
  }
  PointSlice cur = x;
  while (cur.level > s) {
    PointSlice up{cur.level - 1, cur.dim, std::vector<Point>(cur.values.size() / 2)};
    for (std::size_t j = 0; j < up.values.size(); ++j) {
      up.values[j] = 0.5 * (cur.values[2 * j] + cur.values[2 * j + 1]);
    }
    cur = std::move(up);
  }
  return cur;
}

PointSlice cond_expect_point(const PointProcess& x, int t, int s) {
  if (t < 0 || t > x.depth() || s < 0 || s > t) {
    throw Error(ErrorCode::kLevelOutOfRange, "need 0 <= s <= t <= depth");
  }
  return cond_expect(x.slice(t), s);
}

double martingale_defect(const PointProcess& f) {
  double worst = 0.0;
  for (int t = 0; t < f.depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      const Point mean = 0.5 * (f.at(t + 1, 2 * j) + f.at(t + 1, 2 * j + 1));
      worst = std::max(worst, distance(mean, f.at(t, j)));
    }
  }
  return worst;
}

bool is_point_martingale(const PointProcess& f, double tol) { return martingale_defect(f) <= tol; }

PointProcess martingale_from_terminal(const PointSlice& terminal) {
  PointProcess f(terminal.level, terminal.dim);
  PointSlice cur = terminal;
  f.set_slice(cur);
  while (cur.level > 0) {
    cur = cond_expect(cur, cur.level - 1);
    f.set_slice(cur);
  }
  return f;
}

}  // namespace setmart
