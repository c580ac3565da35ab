#include "setmart/randset.hpp"

#include <algorithm>
#include <string>

#include "setmart/error.hpp"

namespace setmart {

namespace {

void check_slice(const PointSlice& f, const SetRV& set) {
  if (f.level != set.level() || f.values.size() != set.atom_count()) {
    throw Error(ErrorCode::kLevelOutOfRange, "slice level does not match the set-valued variable");
  }
  if (f.dim != set.dim()) throw Error(ErrorCode::kDimensionMismatch, "slice dimension differs");
}

}  // namespace

SetRV::SetRV(int level, std::vector<ConvexBody> bodies) : level_(level), bodies_(std::move(bodies)) {
  if (level < 0 || level > ScenarioTree::kMaxDepth) {
    throw Error(ErrorCode::kLevelOutOfRange, "level " + std::to_string(level));
  }
  if (bodies_.size() != ScenarioTree::width(level)) {
    throw Error(ErrorCode::kInvalidParams, "level " + std::to_string(level) + " needs " +
                                               std::to_string(ScenarioTree::width(level)) + " bodies");
  }
  for (const auto& body : bodies_) {
    if (body.dim() != bodies_.front().dim()) throw Error(ErrorCode::kDimensionMismatch, "mixed dimensions");
  }
}

SelectionFamily castaing_vertices(const SetRV& f) {
  std::size_t count = 0;
  for (const auto& body : f.bodies()) count = std::max(count, body.vertex_count());
  SelectionFamily family{f.level(), f.dim(), {}};
  family.members.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    PointSlice member{f.level(), f.dim(), {}};
    member.values.reserve(f.atom_count());
    for (const auto& body : f.bodies()) member.values.push_back(body.vertices()[k % body.vertex_count()]);
    family.members.push_back(std::move(member));
  }
  return family;
}

SetRV cond_expectation_set(const SetRV& f, int s) {
  if (s < 0 || s > f.level()) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "cannot condition level " + std::to_string(f.level()) + " on level " + std::to_string(s));
  }
  std::vector<ConvexBody> cur = f.bodies();
  for (int level = f.level(); level > s; --level) {
    std::vector<ConvexBody> up;
    up.reserve(cur.size() / 2);
    for (std::size_t j = 0; j < cur.size() / 2; ++j) {
      up.push_back(scale(minkowski_sum(cur[2 * j], cur[2 * j + 1]), 0.5));
    }
    cur = std::move(up);
  }
  return SetRV(s, std::move(cur));
}

ConvexBody aumann_expectation(const SetRV& f) { return cond_expectation_set(f, 0).at(0); }

SetRV selection_closure_oracle(const SetRV& f, int s) {
  if (s < 0 || s > f.level()) throw Error(ErrorCode::kLevelOutOfRange, "oracle level out of range");
  std::uint64_t total = 1;
  for (const auto& body : f.bodies()) {
    total *= body.vertex_count();
    if (total > kOracleLimit) {
      throw Error(ErrorCode::kTooLarge, "vertex-choice enumeration exceeds " + std::to_string(kOracleLimit));
    }
  }

  const std::size_t atoms = f.atom_count();
  const std::size_t groups = ScenarioTree::width(s);
  const std::size_t per_group = atoms / groups;
  const double weight = 1.0 / static_cast<double>(per_group);
  std::vector<std::vector<Point>> collected(groups);
  std::vector<std::size_t> choice(atoms, 0);

  auto compact = [&](std::vector<Point>& pts) {
    ConvexBody h = hull(pts, f.dim());
    pts.assign(h.vertices().begin(), h.vertices().end());
  };

  for (std::uint64_t n = 0; n < total; ++n) {
    for (std::size_t g = 0; g < groups; ++g) {
      Point sum{};
      for (std::size_t a = g * per_group; a < (g + 1) * per_group; ++a) sum += f.at(a).vertices()[choice[a]];
      collected[g].push_back(weight * sum);
      if (collected[g].size() > 4096) compact(collected[g]);
    }
    // Odometer over vertex choices, last atom fastest.
    for (std::size_t a = atoms; a-- > 0;) {
      if (++choice[a] < f.at(a).vertex_count()) break;
      choice[a] = 0;
    }
  }

  std::vector<ConvexBody> bodies;
  bodies.reserve(groups);
  for (const auto& pts : collected) bodies.push_back(hull(pts, f.dim()));
  return SetRV(s, std::move(bodies));
}

FiniteSetRV decomposable_values(const std::vector<PointSlice>& members) {
  if (members.empty()) throw Error(ErrorCode::kEmptyFamily, "decomposable hull of an empty family");
  const PointSlice& first = members.front();
  FiniteSetRV out{first.level, first.dim, std::vector<std::vector<Point>>(first.values.size())};
  for (const auto& m : members) {
    if (m.level != first.level || m.values.size() != first.values.size()) {
      throw Error(ErrorCode::kLevelOutOfRange, "members live on different levels");
    }
    if (m.dim != first.dim) throw Error(ErrorCode::kDimensionMismatch, "members differ in dimension");
    for (std::size_t a = 0; a < m.values.size(); ++a) {
      auto& pts = out.points[a];
      if (std::find(pts.begin(), pts.end(), m.values[a]) == pts.end()) pts.push_back(m.values[a]);
    }
  }
  return out;
}

SetRV convexify(const FiniteSetRV& f) {
  std::vector<ConvexBody> bodies;
  bodies.reserve(f.points.size());
  for (const auto& pts : f.points) bodies.push_back(hull(pts, f.dim));
  return SetRV(f.level, std::move(bodies));
}

SetRV decomposable_hull_pointwise(const std::vector<PointSlice>& members) {
  return convexify(decomposable_values(members));
}

double selection_gap(const PointSlice& f, const SetRV& set) {
  check_slice(f, set);
  double worst = 0.0;
  for (std::size_t a = 0; a < set.atom_count(); ++a) worst = std::max(worst, point_distance(set.at(a), f.values[a]));
  return worst;
}

bool is_selection(const PointSlice& f, const SetRV& set, double tol) { return selection_gap(f, set) <= tol; }

}  // namespace setmart
