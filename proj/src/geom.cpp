#include "setmart/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "setmart/error.hpp"

namespace setmart {

namespace {

void check_same_dim(const ConvexBody& a, const ConvexBody& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "bodies of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

void check_direction(Point u) {
  if (u.x == 0.0 && u.y == 0.0) throw Error(ErrorCode::kZeroDirection, "direction must be nonzero");
}

bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// True when from -> mid -> to is not a strict left turn, i.e. `mid` lies
// left of the chord from `from` to `to` or within kCanonicalTol of its line.
bool not_left_turn(Point from, Point mid, Point to) {
  const Point chord = to - from;
  const double len = norm(chord);
  if (len <= kCanonicalTol) return true;
  return cross(chord, mid - from) >= -kCanonicalTol * len;
}

double segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double s = dot(p - a, ab) / len2;
  if (s <= 0.0) return distance(p, a);
  if (s >= 1.0) return distance(p, b);
  return distance(p, a + s * ab);
}

// Lower half of the edge-angle range (-pi/2, pi/2] used by the edge merge.
int edge_half(Point e) { return (e.x > 0.0 || (e.x == 0.0 && e.y > 0.0)) ? 0 : 1; }

std::vector<Point> clip_halfplane(const std::vector<Point>& poly, Point n, double c) {
  std::vector<Point> out;
  if (poly.empty()) return out;
  out.reserve(poly.size() + 1);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point cur = poly[i];
    const Point next = poly[(i + 1) % poly.size()];
    const double dc = dot(n, cur) - c;
    const double dn = dot(n, next) - c;
    if (dc <= 0.0) out.push_back(cur);
    if ((dc <= 0.0) != (dn <= 0.0)) {
      const double s = dc / (dc - dn);
      out.push_back(cur + s * (next - cur));
    }
  }
  return out;
}

}  // namespace

ConvexBody ConvexBody::interval(double lo, double hi) {
  if (!(lo <= hi)) throw Error(ErrorCode::kInvalidParams, "interval needs lo <= hi");
  const Point pts[] = {{lo, 0.0}, {hi, 0.0}};
  return hull(pts, 1);
}

ConvexBody ConvexBody::singleton(Point p, int dim) {
  if (dim == 1) p.y = 0.0;
  return hull(std::span<const Point>(&p, 1), dim);
}

ConvexBody hull(std::span<const Point> points, int dim) {
  if (dim != 1 && dim != 2) throw Error(ErrorCode::kDimensionMismatch, "dimension must be 1 or 2");
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "hull of an empty point list");
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::kInvalidParams, "non-finite coordinate");
    }
  }

  if (dim == 1) {
    double lo = points[0].x;
    double hi = points[0].x;
    for (const Point& p : points) {
      lo = std::min(lo, p.x);
      hi = std::max(hi, p.x);
    }
    if (hi - lo <= kCanonicalTol) return ConvexBody(1, {{lo, 0.0}});
    return ConvexBody(1, {{lo, 0.0}, {hi, 0.0}});
  }

  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return ConvexBody(2, std::move(pts));

  // Andrew's monotone chain; lower chain first gives CCW order from the
  // lexicographic minimum.
  std::vector<Point> chain(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && not_left_turn(chain[k - 2], chain[k - 1], p)) --k;
    chain[k++] = p;
  }
  const std::size_t lower_size = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower_size && not_left_turn(chain[k - 2], chain[k - 1], pts[i])) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);

  // Cyclic cleanup: the chain junctions are never tested above.
  bool changed = true;
  while (changed && chain.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < chain.size() && chain.size() >= 3; ++i) {
      const std::size_t n = chain.size();
      if (not_left_turn(chain[(i + n - 1) % n], chain[i], chain[(i + 1) % n])) {
        chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (chain.size() == 2 && distance(chain[0], chain[1]) <= kCanonicalTol) chain.resize(1);
  std::rotate(chain.begin(), std::min_element(chain.begin(), chain.end(), lex_less), chain.end());
  return ConvexBody(2, std::move(chain));
}

double support(const ConvexBody& c, Point u) {
  check_direction(u);
  if (c.dim() == 1) u.y = 0.0;
  double best = dot(u, c.vertices().front());
  for (const Point& v : c.vertices()) best = std::max(best, dot(u, v));
  return best;
}

double width(const ConvexBody& c, Point u) { return support(c, u) + support(c, -u); }

double body_norm(const ConvexBody& c) {
  double best = 0.0;
  for (const Point& v : c.vertices()) best = std::max(best, norm(v));
  return best;
}

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
  check_same_dim(a, b);
  if (a.dim() == 1) return ConvexBody::interval(a.lo() + b.lo(), a.hi() + b.hi());
  if (a.is_singleton()) return translate(b, a.vertices().front());
  if (b.is_singleton()) return translate(a, b.vertices().front());

  // Merge the edge sequences by polar angle, both starting at their
  // lexicographic minimum (whose sum is the minimum of the sum).
  const auto& p = a.vertices();
  const auto& q = b.vertices();
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  std::vector<Point> out;
  out.reserve(n + m);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    out.push_back(p[i % n] + q[j % m]);
    const Point ep = p[(i + 1) % n] - p[i % n];
    const Point eq = q[(j + 1) % m] - q[j % m];
    if (i == n) {
      ++j;
    } else if (j == m) {
      ++i;
    } else {
      const int hp = edge_half(ep);
      const int hq = edge_half(eq);
      const double turn = cross(ep, eq);
      if (hp < hq || (hp == hq && turn > 0.0)) {
        ++i;
      } else if (hq < hp || (hp == hq && turn < 0.0)) {
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
  }
  return hull(out, 2);
}

ConvexBody scale(const ConvexBody& c, double a) {
  if (a == 0.0) return ConvexBody::singleton({}, c.dim());
  std::vector<Point> pts;
  pts.reserve(c.vertex_count());
  for (const Point& v : c.vertices()) pts.push_back(a * v);
  return hull(pts, c.dim());
}

ConvexBody translate(const ConvexBody& c, Point offset) {
  if (c.dim() == 1) offset.y = 0.0;
  std::vector<Point> pts;
  pts.reserve(c.vertex_count());
  for (const Point& v : c.vertices()) pts.push_back(v + offset);
  return hull(pts, c.dim());
}

ConvexBody weighted_sum(std::span<const ConvexBody> bodies, std::span<const double> weights) {
  if (bodies.empty()) throw Error(ErrorCode::kEmptyInput, "weighted sum of no bodies");
  if (bodies.size() != weights.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one weight per body required");
  }
  ConvexBody acc = scale(bodies[0], weights[0]);
  for (std::size_t i = 1; i < bodies.size(); ++i) acc = minkowski_sum(acc, scale(bodies[i], weights[i]));
  return acc;
}

double point_distance(const ConvexBody& c, Point p) {
  if (c.dim() == 1) p.y = 0.0;
  const auto& v = c.vertices();
  if (v.size() == 1) return distance(p, v[0]);
  if (v.size() == 2) return segment_distance(p, v[0], v[1]);
  bool inside = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross(v[(i + 1) % v.size()] - v[i], p - v[i]) < 0.0) {
      inside = false;
      break;
    }
  }
  if (inside) return 0.0;
  double best = segment_distance(p, v.back(), v.front());
  for (std::size_t i = 0; i + 1 < v.size(); ++i) best = std::min(best, segment_distance(p, v[i], v[i + 1]));
  return best;
}

bool contains_point(const ConvexBody& c, Point p, double tol) { return point_distance(c, p) <= tol; }

double excess(const ConvexBody& b, const ConvexBody& a) {
  check_same_dim(a, b);
  double worst = 0.0;
  for (const Point& v : b.vertices()) worst = std::max(worst, point_distance(a, v));
  return worst;
}

double hausdorff(const ConvexBody& a, const ConvexBody& b) { return std::max(excess(a, b), excess(b, a)); }

bool contains(const ConvexBody& a, const ConvexBody& b, double tol) { return excess(b, a) <= tol; }

std::optional<ConvexBody> hukuhara_diff(const ConvexBody& a, const ConvexBody& b, double tol) {
  check_same_dim(a, b);
  std::optional<ConvexBody> candidate;
  if (a.dim() == 1) {
    if (a.hi() - a.lo() < b.hi() - b.lo() - tol) return std::nullopt;
    const double lo = a.lo() - b.lo();
    candidate = ConvexBody::interval(lo, std::max(lo, a.hi() - b.hi()));
  } else {
    std::vector<Point> directions = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const ConvexBody* body : {&a, &b}) {
      const auto& v = body->vertices();
      if (v.size() < 2) continue;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Point e = v[(i + 1) % v.size()] - v[i];
        const double len = norm(e);
        if (len == 0.0) continue;
        const Point dir = (1.0 / len) * e;
        directions.push_back({dir.y, -dir.x});
        directions.push_back(dir);
        directions.push_back(-dir);
      }
    }
    double lo_x = a.vertices()[0].x, hi_x = lo_x, lo_y = a.vertices()[0].y, hi_y = lo_y;
    double extent = 1.0;
    for (const Point& v : a.vertices()) {
      lo_x = std::min(lo_x, v.x);
      hi_x = std::max(hi_x, v.x);
      lo_y = std::min(lo_y, v.y);
      hi_y = std::max(hi_y, v.y);
      extent = std::max(extent, norm(v));
    }
    for (const Point& v : b.vertices()) extent = std::max(extent, norm(v));
    const double pad = 2.0 * extent + 1.0;
    const std::vector<Point> box = {
        {lo_x - pad, lo_y - pad}, {hi_x + pad, lo_y - pad}, {hi_x + pad, hi_y + pad}, {lo_x - pad, hi_y + pad}};
    auto erode = [&](double slack) -> std::optional<ConvexBody> {
      std::vector<Point> region = box;
      for (const Point& u : directions) {
        region = clip_halfplane(region, u, support(a, u) - support(b, u) + slack);
        if (region.empty()) return std::nullopt;
      }
      return hull(region, 2);
    };
    // Exact erosion, then a retry with slack when it fails.
    candidate = erode(0.0);
    if (!candidate || hausdorff(minkowski_sum(*candidate, b), a) > tol) candidate = erode(kCanonicalTol * extent);
    if (!candidate) return std::nullopt;
  }
  if (hausdorff(minkowski_sum(*candidate, b), a) > tol) return std::nullopt;
  return candidate;
}

Point steiner_point(const ConvexBody& c) {
  const auto& v = c.vertices();
  if (v.size() == 1) return v[0];
  if (c.dim() == 1) return {0.5 * (c.lo() + c.hi()), 0.0};
  // Each vertex is weighted by its exterior angle, i.e. the measure of the
  // directions in which it is the support point.
  Point acc{};
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point in = v[i] - v[(i + n - 1) % n];
    const Point out = v[(i + 1) % n] - v[i];
    const double exterior = std::atan2(cross(in, out), dot(in, out));
    acc += exterior * v[i];
  }
  return (0.5 / std::numbers::pi) * acc;
}

std::vector<Point> probe_directions(int dim) {
  if (dim == 1) return {{1.0, 0.0}, {-1.0, 0.0}};
  std::vector<Point> dirs;
  dirs.reserve(16);
  for (int k = 0; k < 16; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / 16.0;
    dirs.push_back({std::cos(angle), std::sin(angle)});
  }
  return dirs;
}

}  // namespace setmart
