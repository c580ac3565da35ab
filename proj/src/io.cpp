#include "setmart/io.hpp"

#include <fstream>
#include <sstream>

#include "setmart/error.hpp"

namespace setmart::io {

namespace {

Json point_json(Point p, int dim) {
  Json a = Json::array();
  a.push_back(p.x);
  if (dim == 2) a.push_back(p.y);
  return a;
}

Point point_from_json(const Json& j, int dim) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::kDimensionMismatch, "expected a point with " + std::to_string(dim) + " coordinates");
  }
  return {j[0].get<double>(), dim == 2 ? j[1].get<double>() : 0.0};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::kParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string node_key(int t, std::size_t j) { return "(" + std::to_string(t) + "," + std::to_string(j) + ")"; }

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace

Json to_json(const ScenarioTree& tree) { return {{"N", tree.depth()}, {"T", tree.horizon()}, {"dt", tree.dt()}}; }

ScenarioTree tree_from_json(const Json& j) {
  return guarded([&] { return ScenarioTree(field(j, "N").get<int>(), field(j, "T").get<double>()); });
}

Json to_json(const ConvexBody& body) {
  if (body.dim() == 1) return {{"d", 1}, {"lo", body.lo()}, {"hi", body.hi()}};
  Json verts = Json::array();
  for (const Point& v : body.vertices()) verts.push_back(point_json(v, 2));
  return {{"d", 2}, {"verts", verts}};
}

ConvexBody body_from_json(const Json& j) {
  return guarded([&] {
    const int d = field(j, "d").get<int>();
    if (d == 1) {
      const double lo = field(j, "lo").get<double>();
      const double hi = field(j, "hi").get<double>();
      if (!(lo <= hi)) throw Error(ErrorCode::kParseError, "interval with lo > hi");
      return ConvexBody::interval(lo, hi);
    }
    if (d != 2) throw Error(ErrorCode::kDimensionMismatch, "body dimension must be 1 or 2");
    std::vector<Point> pts;
    for (const auto& v : field(j, "verts")) pts.push_back(point_from_json(v, 2));
    if (pts.empty()) throw Error(ErrorCode::kParseError, "body without vertices");
    return hull(pts, 2);
  });
}

Json to_json(const SetRV& rv) {
  Json bodies = Json::array();
  for (const auto& b : rv.bodies()) bodies.push_back(to_json(b));
  return {{"level", rv.level()}, {"bodies", bodies}};
}

SetRV setrv_from_json(const Json& j) {
  return guarded([&] {
    std::vector<ConvexBody> bodies;
    for (const auto& b : field(j, "bodies")) bodies.push_back(body_from_json(b));
    if (bodies.empty()) throw Error(ErrorCode::kParseError, "SetRV without bodies");
    return SetRV(field(j, "level").get<int>(), std::move(bodies));
  });
}

Json to_json(const PointProcess& p) {
  Json values = Json::array();
  for (const Point& v : p.flat()) values.push_back(point_json(v, p.dim()));
  return {{"dim", p.dim()}, {"values", values}};
}

PointProcess point_process_from_json(const Json& j, int depth) {
  return guarded([&] {
    PointProcess p(depth, field(j, "dim").get<int>());
    const Json& values = field(j, "values");
    if (!values.is_array() || values.size() != p.flat().size()) {
      throw Error(ErrorCode::kParseError, "point process needs one value per node");
    }
    for (std::size_t i = 0; i < values.size(); ++i) p.flat()[i] = point_from_json(values[i], p.dim());
    return p;
  });
}

Json to_json(const SetProcess& f) {
  Json levels = Json::array();
  for (const auto& rv : f.levels()) levels.push_back(to_json(rv));
  Json out = {{"tree", to_json(f.tree())}, {"dim", f.dim()}, {"levels", levels}};
  if (f.has_castaing()) {
    Json family = Json::array();
    for (const auto& p : f.castaing()) family.push_back(to_json(p));
    out["castaing"] = family;
  }
  return out;
}

SetProcess set_process_from_json(const Json& j) {
  return guarded([&] {
    const ScenarioTree tree = tree_from_json(field(j, "tree"));
    std::vector<SetRV> levels;
    for (const auto& rv : field(j, "levels")) levels.push_back(setrv_from_json(rv));
    if (levels.empty()) throw Error(ErrorCode::kParseError, "process without levels");
    SetProcess f(tree, std::move(levels));
    if (j.contains("dim") && j.at("dim").get<int>() != f.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "declared dimension differs from bodies");
    }
    if (j.contains("castaing")) {
      std::vector<PointProcess> family;
      for (const auto& p : j.at("castaing")) {
        family.push_back(point_process_from_json(p, tree.depth()));
        if (family.back().dim() != f.dim()) throw Error(ErrorCode::kDimensionMismatch, "Castaing member dimension");
      }
      f.set_castaing(std::move(family));
    }
    return f;
  });
}

Json to_json(const IntegrandFamily& g) {
  Json out = Json::array();
  for (const auto& e : g) {
    Json phi = Json::object();
    for (int t = 0; t < e.phi.depth(); ++t) {
      for (std::size_t n = 0; n < ScenarioTree::width(t); ++n) phi[node_key(t, n)] = point_json(e.phi.at(t, n), e.phi.dim());
    }
    out.push_back({{"x", point_json(e.x, e.phi.dim())}, {"phi", phi}});
  }
  return out;
}

IntegrandFamily family_from_json(const Json& j, int depth) {
  return guarded([&] {
    if (!j.is_array() || j.empty()) throw Error(ErrorCode::kParseError, "integrand family must be a nonempty array");
    IntegrandFamily g;
    for (const auto& item : j) {
      const Json& x = field(item, "x");
      if (!x.is_array()) throw Error(ErrorCode::kParseError, "'x' must be an array");
      const int dim = static_cast<int>(x.size());
      if (dim != 1 && dim != 2) throw Error(ErrorCode::kDimensionMismatch, "'x' must have 1 or 2 coordinates");
      ExtendedIntegrand e{point_from_json(x, dim), Integrand(depth, dim)};
      const Json& phi = field(item, "phi");
      for (int t = 0; t < depth; ++t) {
        for (std::size_t n = 0; n < ScenarioTree::width(t); ++n) {
          const std::string key = node_key(t, n);
          if (!phi.contains(key)) throw Error(ErrorCode::kParseError, "phi missing node " + key);
          e.phi.at(t, n) = point_from_json(phi.at(key), dim);
        }
      }
      g.push_back(std::move(e));
    }
    return g;
  });
}

Json to_json(const ClassifyReport& r) {
  auto gap = [](const NodeGap& g) { return Json{{"s", g.s}, {"t", g.t}, {"atom", g.atom}, {"gap", g.gap}}; };
  return {{"verdict", to_string(r.verdict)},
          {"worst", gap(r.worst)},
          {"worst_sub", gap(r.worst_sub)},
          {"worst_super", gap(r.worst_super)}};
}

Json to_json(const HypothesisReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"t", v.t}, {"k", v.k}, {"s", v.s}, {"atom", v.atom}, {"gap", v.gap}});
  }
  return {{"passed", r.passed()},
          {"initial_zero", r.initial_zero},
          {"initial_gap", r.initial_gap},
          {"castaing_ok", r.castaing_ok},
          {"violation_count", r.violation_count},
          {"violations", violations}};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidParams, "cannot write " + path);
  out << text;
}

}  // namespace setmart::io
