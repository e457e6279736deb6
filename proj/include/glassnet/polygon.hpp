#pragma once

#include <string>
#include <utility>
#include <vector>

namespace glassnet {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// { (x, y) : offset + a x + b y >= 0 }
struct HalfPlane {
  double offset = 0.0;
  double a = 0.0;
  double b = 0.0;

  double operator()(const Point2& p) const { return offset + a * p.x + b * p.y; }
};

/// Vertices closer than this are merged after clipping.
inline constexpr double kSnapTolerance = 1e-12;

/// Convex polygon, counter-clockwise, possibly degenerate (point or segment) or empty.
class ConvexPolygon {
public:
  enum class Shape { empty, point, segment, polygon };

  ConvexPolygon() = default;
  /// Convex hull of arbitrary points.
  static ConvexPolygon hull(std::vector<Point2> points);

  const std::vector<Point2>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  Shape shape() const;
  double area() const;
  /// Positive area above `tolerance`.
  bool has_interior(double tolerance = kSnapTolerance) const { return area() > tolerance; }
  Point2 centroid() const;

  ConvexPolygon clipped(const HalfPlane& h) const;
  ConvexPolygon intersect(const ConvexPolygon& other) const;
  bool contains(const Point2& p, double tolerance = 1e-9) const;
  /// Half-planes whose intersection is the polygon; requires Shape::polygon.
  std::vector<HalfPlane> edges() const;

private:
  std::vector<Point2> vertices_;
};

std::string to_string(ConvexPolygon::Shape shape);

/// CSV `name,vertex,x,y`; each polygon listed as a closed ring (first vertex repeated).
std::string polygon_csv(const std::vector<std::pair<std::string, ConvexPolygon>>& polygons);

}  // namespace glassnet
