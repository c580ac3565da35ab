#include "setmart/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "setmart/error.hpp"
#include "setmart/integral.hpp"

namespace setmart {

namespace {

io::Json reconstruction_json(const Reconstruction& r, const ScenarioTree& tree) {
  io::Json gaps = io::Json::array();
  std::size_t i = 0;
  for (int t = 0; t <= tree.depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) gaps.push_back({{"t", t}, {"j", j}, {"gap", r.node_gaps[i++]}});
  }
  return {{"family_size", r.family.size()},
          {"selector_count", r.selector_count},
          {"max_gap", r.max_gap},
          {"worst", {{"t", r.worst_level}, {"j", r.worst_node}}},
          {"node_gaps", gaps}};
}

// Rational point on the unit circle near angle theta, from the half-angle
// substitution with a dyadic slope.
Point rational_circle_point(double theta) {
  theta = std::remainder(theta, 2.0 * std::numbers::pi);
  double sign = 1.0;
  if (theta > std::numbers::pi / 2) {
    theta -= std::numbers::pi;
    sign = -1.0;
  } else if (theta < -std::numbers::pi / 2) {
    theta += std::numbers::pi;
    sign = -1.0;
  }
  const double slope = std::round(std::tan(theta / 2.0) * 1024.0) / 1024.0;
  const double den = 1.0 + slope * slope;
  return sign * Point{(1.0 - slope * slope) / den, 2.0 * slope / den};
}

void run_representation(ExampleRun& run, double tol) {
  try {
    run.reconstruction = reconstruct_gset(run.process, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kHypothesisViolated && e.code() != ErrorCode::kNotASubmartingale &&
        e.code() != ErrorCode::kForwardInfeasible) {
      throw;
    }
    run.failure = e.what();
    run.exit_code = ExitCode::kAnalytical;
  }
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kConfigError, msg); };
  if (cfg.depth < 1 || cfg.depth > ScenarioTree::kMaxDepth) fail("depth must lie in [1, 20]");
  if (!(cfg.horizon > 0.0) || !std::isfinite(cfg.horizon)) fail("horizon must be positive");
  if (cfg.example != "interval" && cfg.example != "ball" && cfg.example != "custom") {
    fail("example must be interval, ball or custom");
  }
  if (cfg.lambda_grid < 2) fail("lambda grid needs at least 2 points");
  if (cfg.ball_grid < 2) fail("ball grid needs at least 2 points");
  if (!(cfg.tol > 0.0)) fail("tolerance must be positive");
  const std::size_t nodes = (std::size_t{1} << cfg.depth) - 1;
  for (const auto* table : {&cfg.u, &cfg.v}) {
    if (table->size() != 1 && table->size() != nodes) {
      fail("integrand tables need 1 value or one per non-terminal node (" + std::to_string(nodes) + ")");
    }
  }
}

ExperimentConfig config_from_json(const io::Json& j, ExperimentConfig base) {
  if (!j.is_object()) throw Error(ErrorCode::kConfigError, "config must be a JSON object");
  try {
    auto table = [](const io::Json& v) {
      return v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{v.get<double>()};
    };
    if (j.contains("depth")) base.depth = j.at("depth").get<int>();
    if (j.contains("horizon")) base.horizon = j.at("horizon").get<double>();
    if (j.contains("example")) base.example = j.at("example").get<std::string>();
    if (j.contains("lambda_grid")) base.lambda_grid = j.at("lambda_grid").get<int>();
    if (j.contains("ball_grid")) base.ball_grid = j.at("ball_grid").get<int>();
    if (j.contains("tol")) base.tol = j.at("tol").get<double>();
    if (j.contains("out")) base.out_dir = j.at("out").get<std::string>();
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("u")) base.u = table(j.at("u"));
    if (j.contains("v")) base.v = table(j.at("v"));
  } catch (const io::Json::exception& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  return base;
}

io::Json to_json(const ExperimentConfig& cfg) {
  auto table = [](const std::vector<double>& v) { return v.size() == 1 ? io::Json(v[0]) : io::Json(v); };
  return {{"depth", cfg.depth},     {"horizon", cfg.horizon},         {"example", cfg.example},
          {"lambda_grid", cfg.lambda_grid}, {"ball_grid", cfg.ball_grid}, {"tol", cfg.tol},
          {"seed", cfg.seed},       {"u", table(cfg.u)},              {"v", table(cfg.v)}};
}

Integrand scalar_integrand(int depth, const std::vector<double>& values) {
  if (values.size() == 1) return Integrand::constant(depth, {values[0], 0.0}, 1);
  Integrand phi(depth, 1);
  if (values.size() != phi.flat().size()) throw Error(ErrorCode::kConfigError, "integrand table size");
  for (int t = 0; t < depth; ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) phi.at(t, j) = {values[ScenarioTree::flat_index(t, j)], 0.0};
  }
  return phi;
}

ExampleRun run_example_interval(const ExperimentConfig& cfg) {
  validate(cfg);
  const ScenarioTree tree(cfg.depth, cfg.horizon);
  const PointProcess f = ito_integral(tree, scalar_integrand(cfg.depth, cfg.u));
  const PointProcess g = ito_integral(tree, scalar_integrand(cfg.depth, cfg.v));
  std::vector<PointProcess> mixtures;
  for (int i = 0; i < cfg.lambda_grid; ++i) {
    const double lambda = static_cast<double>(i) / (cfg.lambda_grid - 1);
    mixtures.push_back(combine(lambda, f, 1.0 - lambda, g));
  }
  // Closure of the lambda-family per node, via the decomposable hull of each
  // level's slices.
  std::vector<SetRV> levels;
  for (int t = 0; t <= cfg.depth; ++t) {
    std::vector<PointSlice> slices;
    for (const auto& m : mixtures) slices.push_back(m.slice(t));
    levels.push_back(decomposable_hull_pointwise(slices));
  }
  SetProcess process(tree, std::move(levels));
  process.set_castaing(mixtures, cfg.tol);

  ExampleRun run{process, classify(process, cfg.tol), check_representation_hypothesis(process, cfg.tol),
                 std::nullopt, "", {}, ExitCode::kSuccess};

  double endpoint_gap = 0.0;
  double max_width = 0.0;
  for (int t = 0; t <= cfg.depth; ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      const double a = f.at(t, j).x;
      const double b = g.at(t, j).x;
      const ConvexBody& body = process.body(t, j);
      endpoint_gap = std::max({endpoint_gap, std::abs(body.lo() - std::min(a, b)), std::abs(body.hi() - std::max(a, b))});
      max_width = std::max(max_width, body.hi() - body.lo());
    }
  }

  const Verdict verdict = run.classification.verdict;
  if (verdict != Verdict::kMartingale && verdict != Verdict::kSubmartingale) {
    run.exit_code = ExitCode::kAnalytical;
    run.failure = "process is not a submartingale";
  } else {
    run_representation(run, cfg.tol);
  }

  run.report = {{"example", "interval"},
                {"config", to_json(cfg)},
                {"classification", io::to_json(run.classification)},
                {"hypothesis", io::to_json(run.hypothesis)},
                {"endpoint_gap", endpoint_gap},
                {"max_width", max_width}};
  if (run.reconstruction) run.report["reconstruction"] = reconstruction_json(*run.reconstruction, tree);
  if (!run.failure.empty()) run.report["failure"] = run.failure;
  return run;
}

std::vector<Point> ball_grid(int count) {
  if (count < 2) throw Error(ErrorCode::kConfigError, "ball grid needs at least 2 points");
  const int interior = count / 4;
  const int boundary = count - interior;
  std::vector<Point> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < boundary; ++i) grid.push_back(rational_circle_point(2.0 * std::numbers::pi * i / boundary));
  for (int i = 0; i < interior; ++i) {
    grid.push_back(0.5 * rational_circle_point(2.0 * std::numbers::pi * (i + 0.5) / interior));
  }
  return grid;
}

double covering_radius(const std::vector<Point>& grid, double spacing) {
  if (grid.empty()) throw Error(ErrorCode::kEmptyInput, "covering radius of an empty grid");
  // Every disk point is within spacing/sqrt(2) of a lattice node, and
  // projecting that node onto the disk does not increase the distance.
  const int half = static_cast<int>(std::ceil((1.0 + spacing) / spacing));
  double worst = 0.0;
  for (int ix = -half; ix <= half; ++ix) {
    for (int iy = -half; iy <= half; ++iy) {
      Point p{ix * spacing, iy * spacing};
      const double r = norm(p);
      if (r > 1.0 + spacing) continue;
      if (r > 1.0) p = (1.0 / r) * p;
      double nearest = distance(p, grid.front());
      for (const Point& b : grid) nearest = std::min(nearest, distance(p, b));
      worst = std::max(worst, nearest);
    }
  }
  return worst + spacing / std::numbers::sqrt2;
}

ExampleRun run_example_ball(const ExperimentConfig& cfg) {
  validate(cfg);
  const ScenarioTree tree(cfg.depth, cfg.horizon);
  const PointProcess eta = ito_integral(tree, scalar_integrand(cfg.depth, cfg.u));
  const auto grid = ball_grid(cfg.ball_grid);

  std::vector<PointProcess> members;
  double max_eta = 0.0;
  for (const Point& b : grid) {
    PointProcess m(cfg.depth, 2);
    for (std::size_t i = 0; i < m.flat().size(); ++i) m.flat()[i] = eta.flat()[i].x * b;
    members.push_back(std::move(m));
  }
  for (const Point& e : eta.flat()) max_eta = std::max(max_eta, std::abs(e.x));
  SetProcess process = hull_process(tree, members);

  ExampleRun run{process, classify(process, cfg.tol), check_representation_hypothesis(process, cfg.tol),
                 std::nullopt, "", {}, ExitCode::kSuccess};

  const Verdict verdict = run.classification.verdict;
  if (verdict != Verdict::kMartingale && verdict != Verdict::kSubmartingale) {
    run.exit_code = ExitCode::kAnalytical;
    run.failure = "process is not a submartingale";
  } else {
    run_representation(run, cfg.tol);
  }

  // Distance from the scaled grid hull to the scaled unit disk.
  const ConvexBody grid_hull = hull(grid, 2);
  double inner = 1.0;
  const auto& verts = grid_hull.vertices();
  if (verts.size() >= 3) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const Point a = verts[i];
      const Point e = verts[(i + 1) % verts.size()] - a;
      inner = std::min(inner, cross(e, -a) / norm(e));
    }
  } else {
    inner = 0.0;
  }
  const double radius = covering_radius(grid);
  const double bound = radius * max_eta;
  const double disk_gap = (1.0 - inner) * max_eta;

  io::Json grid_json = io::Json::array();
  for (const Point& b : grid) grid_json.push_back({b.x, b.y});
  run.report = {{"example", "ball"},
                {"config", to_json(cfg)},
                {"grid", grid_json},
                {"classification", io::to_json(run.classification)},
                {"hypothesis", io::to_json(run.hypothesis)},
                {"covering_radius", radius},
                {"max_abs_eta", max_eta},
                {"mesh_bound", bound},
                {"disk_gap", disk_gap}};
  if (run.reconstruction) run.report["reconstruction"] = reconstruction_json(*run.reconstruction, tree);
  if (!run.failure.empty()) run.report["failure"] = run.failure;
  return run;
}

CommandResult run_check(const SetProcess& f, double tol) {
  CommandResult out;
  const ClassifyReport c = classify(f, tol);
  out.report = {{"classification", io::to_json(c)}};
  if (c.verdict == Verdict::kMartingale) {
    const DegeneracyReport d = degeneracy_check(f, tol);
    out.report["degeneracy"] = {{"singleton_initial", d.singleton_initial},
                                {"max_width", d.max_width},
                                {"degenerate", d.degenerate},
                                {"note", d.note}};
    const SteinerDecomposition s = steiner_decomposition(f, tol);
    out.report["steiner"] = {{"translation_structure", s.translation_structure},
                             {"body", io::to_json(s.body)},
                             {"initial_point", io::Json::array({s.steiner.at(0, 0).x, s.steiner.at(0, 0).y})},
                             {"max_gap", s.max_gap},
                             {"worst", {{"t", s.worst_level}, {"j", s.worst_node}}}};
    if (s.translation_structure) out.report["steiner"]["m"] = io::to_json(s.steiner);
  }
  if (c.verdict == Verdict::kNone) out.exit_code = ExitCode::kAnalytical;
  return out;
}

CommandResult run_represent(const SetProcess& f, double tol) {
  CommandResult out;
  const ClassifyReport c = classify(f, tol);
  const HypothesisReport h = check_representation_hypothesis(f, tol);
  out.report = {{"classification", io::to_json(c)}, {"hypothesis", io::to_json(h)}};
  if (c.verdict != Verdict::kMartingale && c.verdict != Verdict::kSubmartingale) {
    out.report["error"] = "NotASubmartingale";
    out.exit_code = ExitCode::kAnalytical;
    return out;
  }
  std::string method;
  try {
    Reconstruction r = [&] {
      if (h.initial_zero) {
        method = "trivial_initial";
        return reconstruct_gset(f, tol);
      }
      if (c.verdict == Verdict::kMartingale) {
        method = "extended_martingale";
        return reconstruct_extended(f, tol);
      }
      method = "extended_submartingale";
      return reconstruct_submartingale_extended(f, tol);
    }();
    out.report["method"] = method;
    out.report["reconstruction"] = reconstruction_json(r, f.tree());
    out.family = std::move(r.family);
  } catch (const NodeError& e) {
    if (e.code() != ErrorCode::kHypothesisViolated && e.code() != ErrorCode::kSelectorEscape &&
        e.code() != ErrorCode::kForwardInfeasible) {
      throw;
    }
    out.report["method"] = method;
    out.report["error"] = std::string(to_string(e.code()));
    out.report["message"] = e.what();
    out.report["node"] = {{"t", e.level()}, {"j", e.node()}};
    out.exit_code = ExitCode::kAnalytical;
  }
  return out;
}

std::string interval_csv(const SetProcess& f) {
  std::ostringstream csv;
  csv.precision(17);
  csv << "t,j,time,B,lo,hi\n";
  for (int t = 0; t <= f.depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      const ConvexBody& b = f.body(t, j);
      csv << t << ',' << j << ',' << f.tree().time(t) << ',' << f.tree().brownian(t, j) << ',' << b.lo() << ','
          << b.hi() << '\n';
    }
  }
  return csv.str();
}

void write_example_outputs(const ExampleRun& run, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  io::write_file((base / "process.json").string(), io::to_json(run.process));
  io::write_file((base / "report.json").string(), run.report);
  if (run.reconstruction) io::write_file((base / "family.json").string(), io::to_json(run.reconstruction->family));
  if (run.process.dim() == 1) io::write_text((base / "intervals.csv").string(), interval_csv(run.process));
}

}  // namespace setmart
