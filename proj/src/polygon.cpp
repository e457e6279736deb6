#include "glassnet/polygon.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "glassnet/common.hpp"

namespace glassnet {

namespace {

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool close(const Point2& a, const Point2& b) {
  return std::abs(a.x - b.x) <= kSnapTolerance && std::abs(a.y - b.y) <= kSnapTolerance;
}

}  // namespace

ConvexPolygon ConvexPolygon::hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(),
            [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Point2> unique;
  for (const auto& p : points)
    if (unique.empty() || !close(unique.back(), p)) unique.push_back(p);
  // sorting by x first can separate near-equal points; catch stragglers
  std::vector<Point2> pts;
  for (const auto& p : unique)
    if (std::none_of(pts.begin(), pts.end(), [&](const Point2& q) { return close(p, q); })) pts.push_back(p);

  ConvexPolygon poly;
  if (pts.size() <= 2) {
    poly.vertices_ = pts;
    return poly;
  }
  // Andrew's monotone chain; near-collinear points dropped
  const double eps = 1e-15;
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= eps) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= eps) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  poly.vertices_ = std::move(h);
  return poly;
}

ConvexPolygon::Shape ConvexPolygon::shape() const {
  switch (vertices_.size()) {
    case 0: return Shape::empty;
    case 1: return Shape::point;
    case 2: return Shape::segment;
    default: return Shape::polygon;
  }
}

std::string to_string(ConvexPolygon::Shape shape) {
  switch (shape) {
    case ConvexPolygon::Shape::empty: return "empty";
    case ConvexPolygon::Shape::point: return "point";
    case ConvexPolygon::Shape::segment: return "segment";
    case ConvexPolygon::Shape::polygon: return "polygon";
  }
  return "unknown";
}

double ConvexPolygon::area() const {
  if (vertices_.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % vertices_.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

Point2 ConvexPolygon::centroid() const {
  if (vertices_.empty()) throw PreconditionError("centroid of an empty polygon");
  Point2 c;
  for (const auto& p : vertices_) {
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<double>(vertices_.size());
  c.y /= static_cast<double>(vertices_.size());
  return c;
}

ConvexPolygon ConvexPolygon::clipped(const HalfPlane& h) const {
  const double scale = std::max({std::abs(h.offset), std::abs(h.a), std::abs(h.b)});
  if (scale == 0.0) return *this;
  const double tol = kSnapTolerance * scale;
  std::vector<Point2> out;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = vertices_[i];
    const Point2& q = vertices_[(i + 1) % n];
    const double fp = h(p);
    const double fq = h(q);
    const bool in_p = fp >= -tol;
    if (in_p) out.push_back(p);
    if (n > 1 && ((in_p && fq < -tol && fp > tol) || (!in_p && fq > tol))) {
      const double t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
    if (n == 1) break;
  }
  return hull(std::move(out));
}

ConvexPolygon ConvexPolygon::intersect(const ConvexPolygon& other) const {
  if (other.shape() != Shape::polygon || shape() != Shape::polygon) return {};
  ConvexPolygon result = *this;
  for (const auto& h : other.edges()) {
    result = result.clipped(h);
    if (result.empty()) break;
  }
  return result;
}

std::vector<HalfPlane> ConvexPolygon::edges() const {
  if (shape() != Shape::polygon) throw PreconditionError("edges of a degenerate polygon");
  std::vector<HalfPlane> hs;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % vertices_.size()];
    // left of p -> q: cross(p, q, x) >= 0
    const double a = -(q.y - p.y);
    const double b = q.x - p.x;
    hs.push_back({-(a * p.x + b * p.y), a, b});
  }
  return hs;
}

bool ConvexPolygon::contains(const Point2& p, double tolerance) const {
  if (shape() != Shape::polygon) return false;
  for (const auto& h : edges()) {
    const double norm = std::hypot(h.a, h.b);
    if (h(p) < -tolerance * norm) return false;
  }
  return true;
}

std::string polygon_csv(const std::vector<std::pair<std::string, ConvexPolygon>>& polygons) {
  std::string out = "name,vertex,x,y\n";
  for (const auto& [name, poly] : polygons) {
    const auto& v = poly.vertices();
    for (std::size_t i = 0; i <= v.size() && !v.empty(); ++i) {
      const auto& p = v[i % v.size()];
      out += fmt::format("{},{},{},{}\n", name, i, format_number(p.x), format_number(p.y));
    }
  }
  return out;
}

}  // namespace glassnet
