#include "setmart/process.hpp"

#include <algorithm>

#include "setmart/error.hpp"
#include "setmart/parallel.hpp"

namespace setmart {

SetProcess::SetProcess(const ScenarioTree& tree, std::vector<SetRV> levels)
    : tree_(tree), levels_(std::move(levels)) {
  if (levels_.size() != static_cast<std::size_t>(tree_.depth()) + 1) {
    throw Error(ErrorCode::kLevelOutOfRange, "a process needs one SetRV per tree level");
  }
  for (std::size_t t = 0; t < levels_.size(); ++t) {
    if (levels_[t].level() != static_cast<int>(t)) {
      throw Error(ErrorCode::kLevelOutOfRange, "SetRV levels must run 0..N in order");
    }
    if (levels_[t].dim() != levels_.front().dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "process levels differ in dimension");
    }
  }
}

void SetProcess::set_castaing(std::vector<PointProcess> family, double tol) {
  for (const auto& f : family) {
    if (f.depth() != depth() || f.dim() != dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "Castaing member does not match the process shape");
    }
  }
  if (family.empty()) {
    castaing_.clear();
    return;
  }
  for (int t = 0; t <= depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      std::vector<Point> pts;
      pts.reserve(family.size());
      for (const auto& f : family) pts.push_back(f.at(t, j));
      if (hausdorff(hull(pts, dim()), body(t, j)) > tol) {
        throw Error(ErrorCode::kInvalidParams, "Castaing family does not represent the process at node (" +
                                                   std::to_string(t) + "," + std::to_string(j) + ")");
      }
    }
  }
  castaing_ = std::move(family);
}

std::vector<PointSlice> SetProcess::castaing_at(int t) const {
  tree_.check_level(t);
  if (castaing_.empty()) return castaing_vertices(level(t)).members;
  std::vector<PointSlice> out;
  out.reserve(castaing_.size());
  for (const auto& f : castaing_) out.push_back(f.slice(t));
  return out;
}

SetProcess hull_process(const ScenarioTree& tree, const std::vector<PointProcess>& paths) {
  if (paths.empty()) throw Error(ErrorCode::kEmptyFamily, "hull of an empty path family");
  std::vector<SetRV> levels;
  levels.reserve(static_cast<std::size_t>(tree.depth()) + 1);
  for (int t = 0; t <= tree.depth(); ++t) {
    std::vector<PointSlice> slices;
    slices.reserve(paths.size());
    for (const auto& p : paths) {
      if (p.depth() != tree.depth()) throw Error(ErrorCode::kLevelOutOfRange, "path depth differs from tree");
      slices.push_back(p.slice(t));
    }
    levels.push_back(decomposable_hull_pointwise(slices));
  }
  SetProcess out(tree, std::move(levels));
  out.set_castaing(paths);
  return out;
}

SetProcess add_body(const SetProcess& f, const ConvexBody& c) {
  std::vector<SetRV> levels;
  for (const auto& rv : f.levels()) {
    std::vector<ConvexBody> bodies;
    bodies.reserve(rv.atom_count());
    for (const auto& b : rv.bodies()) bodies.push_back(minkowski_sum(b, c));
    levels.emplace_back(rv.level(), std::move(bodies));
  }
  return SetProcess(f.tree(), std::move(levels));
}

SetProcess translate_process(const ScenarioTree& tree, const ConvexBody& c, const PointProcess& m) {
  if (m.depth() != tree.depth() || m.dim() != c.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "point process does not match tree or body");
  }
  std::vector<SetRV> levels;
  for (int t = 0; t <= tree.depth(); ++t) {
    std::vector<ConvexBody> bodies;
    bodies.reserve(ScenarioTree::width(t));
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) bodies.push_back(translate(c, m.at(t, j)));
    levels.emplace_back(t, std::move(bodies));
  }
  return SetProcess(tree, std::move(levels));
}

double max_node_hausdorff(const SetProcess& a, const SetProcess& b) {
  if (a.depth() != b.depth()) throw Error(ErrorCode::kLevelOutOfRange, "processes differ in depth");
  double worst = 0.0;
  for (int t = 0; t <= a.depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      worst = std::max(worst, hausdorff(a.body(t, j), b.body(t, j)));
    }
  }
  return worst;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kMartingale: return "Martingale";
    case Verdict::kSubmartingale: return "Submartingale";
    case Verdict::kSupermartingale: return "Supermartingale";
    case Verdict::kNone: return "None";
  }
  return "None";
}

ClassifyReport classify(const SetProcess& f, double tol) {
  const int n = f.depth();
  std::vector<ClassifyReport> per_t(static_cast<std::size_t>(n) + 1);
  parallel_for(static_cast<std::size_t>(n) + 1, [&](std::size_t ti) {
    const int t = static_cast<int>(ti);
    ClassifyReport& r = per_t[ti];
    SetRV expected = f.level(t);
    for (int s = t - 1; s >= 0; --s) {
      expected = cond_expectation_set(expected, s);
      for (std::size_t a = 0; a < expected.atom_count(); ++a) {
        const ConvexBody& e = expected.at(a);
        const ConvexBody& fs = f.body(s, a);
        const double sub = excess(fs, e);
        const double super = excess(e, fs);
        const double both = std::max(sub, super);
        if (both > r.worst.gap) r.worst = {s, t, a, both};
        if (sub > r.worst_sub.gap) r.worst_sub = {s, t, a, sub};
        if (super > r.worst_super.gap) r.worst_super = {s, t, a, super};
      }
    }
  });

  ClassifyReport out;
  out.worst = {0, 1, 0, 0.0};
  out.worst_sub = out.worst;
  out.worst_super = out.worst;
  for (const auto& r : per_t) {
    if (r.worst.gap > out.worst.gap) out.worst = r.worst;
    if (r.worst_sub.gap > out.worst_sub.gap) out.worst_sub = r.worst_sub;
    if (r.worst_super.gap > out.worst_super.gap) out.worst_super = r.worst_super;
  }
  if (out.worst.gap <= tol) {
    out.verdict = Verdict::kMartingale;
  } else if (out.worst_sub.gap <= tol) {
    out.verdict = Verdict::kSubmartingale;
  } else if (out.worst_super.gap <= tol) {
    out.verdict = Verdict::kSupermartingale;
  } else {
    out.verdict = Verdict::kNone;
  }
  return out;
}

DegeneracyReport degeneracy_check(const SetProcess& f, double tol) {
  if (classify(f, tol).verdict != Verdict::kMartingale) {
    throw Error(ErrorCode::kNotAMartingale, "degeneracy check needs a set-valued martingale");
  }
  DegeneracyReport report;
  const auto dirs = probe_directions(f.dim());
  double initial = 0.0;
  for (const Point& u : dirs) initial = std::max(initial, width(f.body(0, 0), u));
  if (initial > tol) {
    report.note = "non-singleton initial";
    return report;
  }
  report.singleton_initial = true;
  for (int t = 0; t <= f.depth(); ++t) {
    for (const auto& body : f.level(t).bodies()) {
      for (const Point& u : dirs) report.max_width = std::max(report.max_width, width(body, u));
    }
  }
  report.degenerate = report.max_width <= tol;
  report.note = report.degenerate ? "degenerate: singleton-valued" : "singleton initial but non-singleton values";
  return report;
}

SteinerDecomposition steiner_decomposition(const SetProcess& m, double tol) {
  if (classify(m, tol).verdict != Verdict::kMartingale) {
    throw Error(ErrorCode::kNotAMartingale, "Steiner decomposition needs a set-valued martingale");
  }
  PointProcess points(m.depth(), m.dim());
  for (int t = 0; t <= m.depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) points.at(t, j) = steiner_point(m.body(t, j));
  }
  ConvexBody body = translate(m.body(0, 0), -points.at(0, 0));
  SteinerDecomposition out{false, points, body, 0.0, 0, 0};
  for (int t = 0; t <= m.depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      const double gap = hausdorff(m.body(t, j), translate(body, points.at(t, j)));
      if (gap > out.max_gap) {
        out.max_gap = gap;
        out.worst_level = t;
        out.worst_node = j;
      }
    }
  }
  out.translation_structure = out.max_gap <= tol;
  return out;
}

}  // namespace setmart
