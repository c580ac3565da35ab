#include "setmart/represent.hpp"

#include <algorithm>
#include <array>

#include "setmart/error.hpp"
#include "setmart/lp.hpp"
#include "setmart/parallel.hpp"

namespace setmart {

namespace {

constexpr std::size_t kMaxListedViolations = 64;
constexpr double kDuplicateTol = 1e-12;

void require_submartingale(const SetProcess& f, double tol) {
  const Verdict v = classify(f, tol).verdict;
  if (v != Verdict::kMartingale && v != Verdict::kSubmartingale) {
    throw Error(ErrorCode::kNotASubmartingale, "process classifies as " + to_string(v));
  }
}

void require_hypothesis(const SetProcess& f, double tol, bool need_zero_initial) {
  const HypothesisReport h = check_representation_hypothesis(f, tol);
  if (need_zero_initial && !h.initial_zero) {
    throw NodeError(ErrorCode::kHypothesisViolated, 0, 0, "initial value is not {0}");
  }
  if (!h.castaing_ok) {
    throw NodeError(ErrorCode::kHypothesisViolated, h.worst.s, h.worst.atom,
                    "conditional expectation of Castaing member " + std::to_string(h.worst.k) + " at level " +
                        std::to_string(h.worst.t) + " leaves F_s");
  }
}

std::vector<PointProcess> dedupe(std::vector<PointProcess> paths) {
  std::vector<PointProcess> kept;
  for (auto& p : paths) {
    const bool seen = std::any_of(kept.begin(), kept.end(),
                                  [&](const PointProcess& q) { return max_node_distance(p, q) <= kDuplicateTol; });
    if (!seen) kept.push_back(std::move(p));
  }
  return kept;
}

}  // namespace

HypothesisReport check_representation_hypothesis(const SetProcess& f, double tol) {
  HypothesisReport report;
  report.initial_gap = hausdorff(f.body(0, 0), ConvexBody::singleton({}, f.dim()));
  report.initial_zero = report.initial_gap <= tol;
  for (int t = 1; t <= f.depth(); ++t) {
    const auto members = f.castaing_at(t);
    for (std::size_t k = 0; k < members.size(); ++k) {
      PointSlice cur = members[k];
      for (int s = t - 1; s >= 0; --s) {
        cur = cond_expect(cur, s);
        for (std::size_t a = 0; a < cur.values.size(); ++a) {
          const double gap = point_distance(f.body(s, a), cur.values[a]);
          if (gap <= tol) continue;
          const HypothesisViolation v{t, k, s, a, gap};
          if (report.violation_count == 0 || gap > report.worst.gap) report.worst = v;
          ++report.violation_count;
          if (report.violations.size() < kMaxListedViolations) report.violations.push_back(v);
        }
      }
    }
  }
  report.castaing_ok = report.violation_count == 0;
  return report;
}

SelectorSystem build_selector_system(const SetProcess& f, double tol) {
  require_submartingale(f, tol);
  struct Job {
    int r;
    std::size_t k;
    PointSlice seed;
  };
  std::vector<Job> jobs;
  for (int r = 0; r <= f.depth(); ++r) {
    auto members = f.castaing_at(r);
    for (std::size_t k = 0; k < members.size(); ++k) jobs.push_back({r, k, std::move(members[k])});
  }

  std::vector<PointProcess> paths(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const Job& job = jobs[i];
    PointProcess path(f.depth(), f.dim());
    path.set_slice(job.seed);
    PointSlice cur = job.seed;
    for (int t = job.r - 1; t >= 0; --t) {
      cur = cond_expect(cur, t);
      path.set_slice(cur);
    }
    static constexpr std::array<double, 2> kHalves = {0.5, 0.5};
    for (int t = job.r + 1; t <= f.depth(); ++t) {
      for (std::size_t j = 0; j < ScenarioTree::width(t - 1); ++j) {
        const std::array<ConvexBody, 2> children = {f.body(t, 2 * j), f.body(t, 2 * j + 1)};
        const auto pick = match_conditional_average(children, kHalves, path.at(t - 1, j), tol);
        if (!pick) {
          throw NodeError(ErrorCode::kForwardInfeasible, t - 1, j,
                          "no forward extension for selector (r=" + std::to_string(job.r) +
                              ", k=" + std::to_string(job.k) + ")");
        }
        path.at(t, 2 * j) = (*pick)[0];
        path.at(t, 2 * j + 1) = (*pick)[1];
      }
    }
    paths[i] = std::move(path);
  });

  SelectorSystem system;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const bool seen = std::any_of(system.selectors.begin(), system.selectors.end(), [&](const Selector& s) {
      return max_node_distance(s.path, paths[i]) <= kDuplicateTol;
    });
    if (!seen) system.selectors.push_back({jobs[i].r, jobs[i].k, std::move(paths[i])});
  }
  return system;
}

ExtendedIntegrand discrete_mrt(const ScenarioTree& tree, const PointProcess& f, double tol) {
  if (f.depth() != tree.depth()) throw Error(ErrorCode::kLevelOutOfRange, "process depth differs from tree");
  if (!is_point_martingale(f, tol)) {
    throw Error(ErrorCode::kNotAMartingale, "martingale defect " + std::to_string(martingale_defect(f)));
  }
  ExtendedIntegrand e{f.at(0, 0), Integrand(tree.depth(), f.dim())};
  const double inv = 0.5 / tree.step();
  for (int t = 0; t < tree.depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      e.phi.at(t, j) = inv * (f.at(t + 1, 2 * j) - f.at(t + 1, 2 * j + 1));
    }
  }
  return e;
}

Reconstruction measure_reconstruction(const SetProcess& f, IntegrandFamily g) {
  Reconstruction out;
  const SetProcess rebuilt = gset_integral(f.tree(), g);
  out.family = std::move(g);
  out.node_gaps.reserve(f.tree().node_count());
  for (int t = 0; t <= f.depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      const double gap = hausdorff(f.body(t, j), rebuilt.body(t, j));
      out.node_gaps.push_back(gap);
      if (gap > out.max_gap) {
        out.max_gap = gap;
        out.worst_level = t;
        out.worst_node = j;
      }
    }
  }
  return out;
}

Reconstruction reconstruct_gset(const SetProcess& f, double tol) {
  require_hypothesis(f, tol, /*need_zero_initial=*/true);
  const SelectorSystem system = build_selector_system(f, tol);
  IntegrandFamily g;
  g.reserve(system.selectors.size());
  for (const auto& s : system.selectors) {
    ExtendedIntegrand e = discrete_mrt(f.tree(), s.path, tol);
    e.x = Point{};
    g.push_back(std::move(e));
  }
  Reconstruction out = measure_reconstruction(f, std::move(g));
  out.selector_count = system.selectors.size();
  return out;
}

std::vector<PointProcess> martingale_selector_family(const SetProcess& m, double tol) {
  if (classify(m, tol).verdict != Verdict::kMartingale) {
    throw Error(ErrorCode::kNotAMartingale, "martingale selectors need a set-valued martingale");
  }
  std::vector<PointProcess> out;
  for (const auto& terminal : m.castaing_at(m.depth())) {
    PointProcess f = martingale_from_terminal(terminal);
    for (int t = 0; t <= m.depth(); ++t) {
      for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
        if (point_distance(m.body(t, j), f.at(t, j)) > tol) {
          throw NodeError(ErrorCode::kSelectorEscape, t, j, "backward selector leaves M_t");
        }
      }
    }
    out.push_back(std::move(f));
  }
  return dedupe(std::move(out));
}

Reconstruction reconstruct_extended(const SetProcess& m, double tol) {
  const auto selectors = martingale_selector_family(m, tol);
  IntegrandFamily g;
  g.reserve(selectors.size());
  for (const auto& f : selectors) g.push_back(discrete_mrt(m.tree(), f, tol));
  Reconstruction out = measure_reconstruction(m, std::move(g));
  out.selector_count = selectors.size();
  return out;
}

Reconstruction reconstruct_submartingale_extended(const SetProcess& f, double tol) {
  require_submartingale(f, tol);
  require_hypothesis(f, tol, /*need_zero_initial=*/false);
  const SelectorSystem system = build_selector_system(f, tol);
  IntegrandFamily g;
  g.reserve(system.selectors.size());
  for (const auto& s : system.selectors) g.push_back(discrete_mrt(f.tree(), s.path, tol));
  Reconstruction out = measure_reconstruction(f, std::move(g));
  out.selector_count = system.selectors.size();
  return out;
}

}  // namespace setmart
