#include "glassnet/batch.hpp"

#include <random>

namespace glassnet {

Vector embed_on_wall(const CycleSpec& cycle, const Vector& reduced) {
  const int n = cycle.dimension();
  if (reduced.size() != n - 1) throw PreconditionError("wall point has wrong dimension");
  Vector y = Vector::Zero(n);
  for (int i = 0, k = 0; i < n; ++i)
    if (i != cycle.wall_variable()) y[i] = reduced[k++];
  return y;
}

Vector restrict_to_wall(const CycleSpec& cycle, const Vector& full) {
  const int n = cycle.dimension();
  Vector r(n - 1);
  for (int i = 0, k = 0; i < n; ++i)
    if (i != cycle.wall_variable()) r[k++] = full[i];
  return r;
}

FirstReturn first_return(const GlassNetwork& net, const CycleSpec& cycle, const Vector& reduced_point,
                         std::size_t max_transitions) {
  FirstReturn out;
  Vector y = embed_on_wall(cycle, reduced_point);
  OrthantCode code = cycle.entered();
  const OrthantCode last = cycle.codes().back();
  CompensatedSum clock;
  out.path.push_back(code);
  for (std::size_t count = 0; count < max_transitions; ++count) {
    Step step = next_transition(net, y, code);
    if (step.kind == StepKind::converged) {
      out.terminal = Terminal::converged_to_focal_point;
      return out;
    }
    if (step.kind == StepKind::degenerate) {
      out.terminal = Terminal::degenerate_event;
      return out;
    }
    clock.add(step.duration);
    const OrthantCode next = code.flipped(step.variable);
    y = std::move(step.exit_point);
    if (code == last && next == cycle.entered()) {
      out.returned = true;
      out.point = std::move(y);
      out.time = clock.value();
      return out;
    }
    code = next;
    out.path.push_back(code);
  }
  out.terminal = Terminal::reached_max_transitions;
  return out;
}

std::vector<FirstReturn> first_returns(const GlassNetwork& net, const CycleSpec& cycle,
                                       const std::vector<Vector>& reduced_points, std::size_t max_transitions,
                                       Execution execution) {
  const auto count = static_cast<std::int64_t>(reduced_points.size());
  std::vector<FirstReturn> out(reduced_points.size());
  if (execution == Execution::serial) {
    for (std::int64_t i = 0; i < count; ++i) out[i] = first_return(net, cycle, reduced_points[i], max_transitions);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[i] = first_return(net, cycle, reduced_points[i], max_transitions);
  return out;
}

std::vector<Membership> classify_points(const ReturningCone& cone, const std::vector<Vector>& points,
                                        Execution execution) {
  const auto count = static_cast<std::int64_t>(points.size());
  std::vector<Membership> out(points.size());
  if (execution == Execution::serial) {
    for (std::int64_t i = 0; i < count; ++i) out[i] = cone_contains(cone, points[i]);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[i] = cone_contains(cone, points[i]);
  return out;
}

std::vector<Vector> apply_map(const FractionalLinearMap& map, const std::vector<Vector>& points, Execution execution) {
  const auto count = static_cast<std::int64_t>(points.size());
  std::vector<Vector> out(points.size());
  if (execution == Execution::serial) {
    for (std::int64_t i = 0; i < count; ++i) out[i] = map(points[i]);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[i] = map(points[i]);
  return out;
}

std::vector<Vector> sample_octant(const Vector& signs, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> weight(1.0);
  std::uniform_real_distribution<double> scale(0.05, 2.0);
  std::vector<Vector> points;
  points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Vector x(signs.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = weight(rng) + 1e-9;
    x *= scale(rng) / x.sum();
    points.push_back(x.cwiseProduct(signs));
  }
  return points;
}

std::vector<Point2> sample_polygon(const ConvexPolygon& polygon, std::size_t count, std::uint64_t seed) {
  if (polygon.shape() != ConvexPolygon::Shape::polygon) throw PreconditionError("sampling a degenerate polygon");
  const auto& v = polygon.vertices();
  std::vector<double> cumulative;
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    total += 0.5 * std::abs((v[i].x - v[0].x) * (v[i + 1].y - v[0].y) - (v[i].y - v[0].y) * (v[i + 1].x - v[0].x));
    cumulative.push_back(total);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point2> points;
  points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double pick = unit(rng) * total;
    std::size_t t = 0;
    while (t + 1 < cumulative.size() && cumulative[t] < pick) ++t;
    double a = unit(rng), b = unit(rng);
    if (a + b > 1.0) {
      a = 1.0 - a;
      b = 1.0 - b;
    }
    const Point2& p = v[0];
    const Point2& q = v[t + 1];
    const Point2& r = v[t + 2];
    points.push_back({p.x + a * (q.x - p.x) + b * (r.x - p.x), p.y + a * (q.y - p.y) + b * (r.y - p.y)});
  }
  return points;
}

}  // namespace glassnet
