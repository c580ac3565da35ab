#include "setmart/integral.hpp"

#include "setmart/error.hpp"

namespace setmart {

namespace {

void check_family(const ScenarioTree& tree, const IntegrandFamily& g) {
  if (g.empty()) throw Error(ErrorCode::kEmptyFamily, "integrand family is empty");
  for (const auto& e : g) {
    if (e.phi.depth() != tree.depth()) throw Error(ErrorCode::kLevelOutOfRange, "integrand depth differs from tree");
    if (e.phi.dim() != g.front().phi.dim()) throw Error(ErrorCode::kDimensionMismatch, "mixed integrand dimensions");
  }
}

}  // namespace

Integrand::Integrand(int depth, int dim) : depth_(depth), dim_(dim) {
  if (dim != 1 && dim != 2) throw Error(ErrorCode::kDimensionMismatch, "dimension must be 1 or 2");
  if (depth < 1 || depth > ScenarioTree::kMaxDepth) throw Error(ErrorCode::kInvalidParams, "integrand depth");
  values_.assign((std::size_t{1} << depth) - 1, Point{});
}

Integrand Integrand::constant(int depth, Point value, int dim) {
  Integrand phi(depth, dim);
  if (dim == 1) value.y = 0.0;
  for (auto& v : phi.values_) v = value;
  return phi;
}

Point& Integrand::at(int level, std::size_t j) { return values_.at(ScenarioTree::flat_index(level, j)); }

Point Integrand::at(int level, std::size_t j) const { return values_.at(ScenarioTree::flat_index(level, j)); }

PointProcess ito_integral(const ScenarioTree& tree, const Integrand& phi) {
  if (phi.depth() != tree.depth()) throw Error(ErrorCode::kLevelOutOfRange, "integrand depth differs from tree");
  PointProcess f(tree.depth(), phi.dim());
  for (int t = 0; t < tree.depth(); ++t) {
    for (std::size_t j = 0; j < ScenarioTree::width(t); ++j) {
      const Point base = f.at(t, j);
      const Point slope = phi.at(t, j);
      for (std::size_t c = 0; c < 2; ++c) {
        const std::size_t child = 2 * j + c;
        f.at(t + 1, child) = base + tree.increment(child) * slope;
      }
    }
  }
  return f;
}

PointProcess extended_path(const ScenarioTree& tree, const ExtendedIntegrand& e) {
  PointProcess f = ito_integral(tree, e.phi);
  Point x = e.x;
  if (f.dim() == 1) x.y = 0.0;
  for (auto& v : f.flat()) v += x;
  return f;
}

std::vector<PointProcess> extended_paths(const ScenarioTree& tree, const IntegrandFamily& g) {
  check_family(tree, g);
  std::vector<PointProcess> paths;
  paths.reserve(g.size());
  for (const auto& e : g) paths.push_back(extended_path(tree, e));
  return paths;
}

SetProcess gset_integral(const ScenarioTree& tree, const IntegrandFamily& g) {
  return hull_process(tree, extended_paths(tree, g));
}

std::vector<FiniteSetRV> gset_values(const ScenarioTree& tree, const IntegrandFamily& g) {
  const auto paths = extended_paths(tree, g);
  std::vector<FiniteSetRV> out;
  for (int t = 0; t <= tree.depth(); ++t) {
    std::vector<PointSlice> slices;
    slices.reserve(paths.size());
    for (const auto& p : paths) slices.push_back(p.slice(t));
    out.push_back(decomposable_values(slices));
  }
  return out;
}

SubmartingaleCheck integral_is_submartingale(const ScenarioTree& tree, const IntegrandFamily& g, double tol) {
  SubmartingaleCheck out;
  out.report = classify(gset_integral(tree, g), tol);
  out.holds = out.report.verdict == Verdict::kMartingale || out.report.verdict == Verdict::kSubmartingale;
  return out;
}

}  // namespace setmart
