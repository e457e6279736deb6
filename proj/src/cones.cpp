#include "glassnet/cones.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include <fmt/format.h>

#include "glassnet/lp.hpp"

namespace glassnet {

namespace {

constexpr double kRedundancyTolerance = 1e-12;

void require_slice_dimension(const Vector& signs) {
  if (signs.size() != 3) throw PreconditionError("slice geometry needs exactly three wall coordinates");
}

// min over the slice simplex {x >= 0, sum x = 1} cut by `rows` of objective . y,
// with y = signs o x. Returns nullopt when the region is empty.
std::optional<double> lp_minimum(const std::vector<const ConeRow*>& rows, const Vector& signs, const Vector& objective) {
  const auto d = signs.size();
  const auto m = static_cast<Eigen::Index>(rows.size());
  // variables: x (d), slacks (m)
  Matrix A = Matrix::Zero(m + 1, d + m);
  Vector b = Vector::Zero(m + 1);
  for (Eigen::Index r = 0; r < m; ++r) {
    A.block(r, 0, 1, d) = rows[static_cast<std::size_t>(r)]->coefficients.cwiseProduct(signs).transpose();
    A(r, d + r) = -1.0;
  }
  A.block(m, 0, 1, d).setOnes();
  b[m] = 1.0;
  Vector c = Vector::Zero(d + m);
  c.head(d) = objective.cwiseProduct(signs);
  const LpResult res = minimize_lp(c, A, b);
  if (res.status != LpStatus::optimal) return std::nullopt;
  return res.value;
}

std::optional<double> slice_minimum(const std::vector<const ConeRow*>& rows, const Vector& signs,
                                    const Vector& objective) {
  ConvexPolygon poly = slice_triangle(signs);
  for (const ConeRow* r : rows) {
    poly = poly.clipped(slice_half_plane(r->coefficients, signs));
    if (poly.empty()) return std::nullopt;
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : poly.vertices()) best = std::min(best, objective.dot(lift_from_slice(v, signs)));
  return best;
}

RedundancyMethod resolve(RedundancyMethod method, const Vector& signs) {
  if (method != RedundancyMethod::automatic) return method;
  return signs.size() == 3 ? RedundancyMethod::slice : RedundancyMethod::lp;
}

}  // namespace

std::string to_string(Membership membership) {
  switch (membership) {
    case Membership::interior: return "interior";
    case Membership::boundary: return "boundary";
    case Membership::outside: return "outside";
  }
  return "unknown";
}

std::vector<ConeRow> remove_redundant(const std::vector<ConeRow>& rows, const Vector& signs, RedundancyMethod method) {
  method = resolve(method, signs);
  if (method == RedundancyMethod::slice) require_slice_dimension(signs);

  std::vector<bool> keep(rows.size(), true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double norm = rows[i].coefficients.lpNorm<1>();
    if (norm == 0.0) {
      keep[i] = false;
      continue;
    }
    std::vector<const ConeRow*> others;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != i && keep[k]) others.push_back(&rows[k]);
    const auto minimum = method == RedundancyMethod::slice ? slice_minimum(others, signs, rows[i].coefficients)
                                                           : lp_minimum(others, signs, rows[i].coefficients);
    // an empty remainder implies every row
    if (!minimum || *minimum >= -kRedundancyTolerance * norm) keep[i] = false;
  }
  std::vector<ConeRow> kept;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) kept.push_back(rows[i]);
  return kept;
}

bool cone_has_interior(const std::vector<ConeRow>& rows, const Vector& signs, RedundancyMethod method) {
  method = resolve(method, signs);
  if (method == RedundancyMethod::slice) return cone_to_polygon(rows, signs).has_interior();

  // maximize t: rows . y >= t ||row||_1, x_k >= t, sum x = 1, with y = signs o x
  const auto d = signs.size();
  const auto m = static_cast<Eigen::Index>(rows.size());
  // variables: x (d), t, row slacks (m), coordinate slacks (d)
  const Eigen::Index vars = d + 1 + m + d;
  Matrix A = Matrix::Zero(m + d + 1, vars);
  Vector b = Vector::Zero(m + d + 1);
  for (Eigen::Index r = 0; r < m; ++r) {
    const Vector& row = rows[static_cast<std::size_t>(r)].coefficients;
    A.block(r, 0, 1, d) = row.cwiseProduct(signs).transpose();
    A(r, d) = -std::max(row.lpNorm<1>(), 1e-300);
    A(r, d + 1 + r) = -1.0;
  }
  for (Eigen::Index k = 0; k < d; ++k) {
    A(m + k, k) = 1.0;
    A(m + k, d) = -1.0;
    A(m + k, d + 1 + m + k) = -1.0;
  }
  A.block(m + d, 0, 1, d).setOnes();
  b[m + d] = 1.0;
  Vector c = Vector::Zero(vars);
  c[d] = -1.0;
  const LpResult res = minimize_lp(c, A, b);
  return res.status == LpStatus::optimal && -res.value > kRedundancyTolerance;
}

ReturningCone returning_cone(const GlassNetwork& net, const CycleSpec& cycle, bool prune, RedundancyMethod method) {
  const CycleMap cm = cycle_map(net, cycle);
  ReturningCone cone{cycle, cm.kept, cm.octant_signs(), {}, {}, false};

  const int n = net.dimension();
  Matrix product = Matrix::Identity(n, n);
  for (std::size_t k = 0; k < cycle.length(); ++k) {
    const OrthantCode& code = cycle.codes()[k];
    const int exit = cycle.switches()[k];
    const Vector& f = net.focal_point(code);
    product = cm.steps[k].numerator() * product;
    for (int i = 0; i < n; ++i) {
      if (i == exit || f[i] * code.sign(i) > 0.0) continue;
      // component i must keep its sign at the moment y_exit reaches zero
      const Vector full_row = -product.row(i).transpose() / f[i];
      cone.generated.push_back({cm.restrict(full_row), k, i});
    }
  }

  cone.empty = !cone_has_interior(cone.generated, cone.signs, method);
  cone.rows = prune && !cone.empty ? remove_redundant(cone.generated, cone.signs, method) : cone.generated;
  return cone;
}

Membership cone_contains(const std::vector<ConeRow>& rows, const Vector& signs, const Vector& y, double tolerance) {
  if (y.size() != signs.size()) throw PreconditionError("point has wrong dimension for the cone");
  const double threshold = tolerance * y.lpNorm<1>();
  bool boundary = false;
  auto check = [&](double value) {
    if (value < -threshold) return false;
    if (value <= threshold) boundary = true;
    return true;
  };
  for (Eigen::Index i = 0; i < y.size(); ++i)
    if (!check(signs[i] * y[i])) return Membership::outside;
  for (const auto& row : rows) {
    const double norm = row.coefficients.lpNorm<1>();
    if (norm == 0.0) continue;
    if (!check(row.coefficients.dot(y) / norm)) return Membership::outside;
  }
  return boundary ? Membership::boundary : Membership::interior;
}

Membership cone_contains(const ReturningCone& cone, const Vector& y, double tolerance) {
  if (cone.empty && y.lpNorm<1>() > 0.0) return Membership::outside;
  return cone_contains(cone.rows, cone.signs, y, tolerance);
}

Point2 project_to_slice(const Vector& y, const Vector& signs) {
  if (y.size() != signs.size() || y.size() < 2) throw PreconditionError("slice projection needs matching dimensions >= 2");
  const double s = signs.dot(y);
  if (!(s > 0.0)) throw PreconditionError("ray does not meet the slice plane");
  const auto d = y.size();
  return {y[d - 2] / s, y[d - 1] / s};
}

Vector lift_from_slice(const Point2& p, const Vector& signs) {
  require_slice_dimension(signs);
  Vector y(3);
  y[1] = p.x;
  y[2] = p.y;
  y[0] = signs[0] * (1.0 - signs[1] * p.x - signs[2] * p.y);
  return y;
}

HalfPlane slice_half_plane(const Vector& row, const Vector& signs) {
  require_slice_dimension(signs);
  // row . lift(u, v) with y0 = s0 (1 - s1 u - s2 v)
  const double head = row[0] * signs[0];
  return {head, row[1] - head * signs[1], row[2] - head * signs[2]};
}

ConvexPolygon slice_triangle(const Vector& signs) {
  require_slice_dimension(signs);
  return ConvexPolygon::hull({{0.0, 0.0}, {signs[1], 0.0}, {0.0, signs[2]}});
}

ConvexPolygon cone_to_polygon(const std::vector<ConeRow>& rows, const Vector& signs) {
  ConvexPolygon poly = slice_triangle(signs);
  for (const auto& row : rows) {
    poly = poly.clipped(slice_half_plane(row.coefficients, signs));
    if (poly.empty()) break;
  }
  return poly;
}

ConvexPolygon cone_to_polygon(const ReturningCone& cone) {
  if (cone.empty) return {};
  return cone_to_polygon(cone.rows, cone.signs);
}

ConvexPolygon map_polygon(const FractionalLinearMap& map, const ConvexPolygon& polygon, const Vector& signs) {
  require_slice_dimension(signs);
  if (map.dimension() != 3) throw PreconditionError("map_polygon needs a reduced map on three coordinates");
  std::vector<Point2> images;
  for (const auto& v : polygon.vertices()) {
    const Vector y = lift_from_slice(v, signs);
    if (!(map.denominator_at(y) > 0.0))
      throw ProjectiveFoldError(fmt::format("map denominator is not positive at slice vertex ({}, {})", v.x, v.y));
    const Vector image = map(y);
    if (!(signs.dot(image) > 0.0))
      throw ProjectiveFoldError(fmt::format("image of slice vertex ({}, {}) does not meet the slice", v.x, v.y));
    images.push_back(project_to_slice(image, signs));
  }
  return ConvexPolygon::hull(std::move(images));
}

std::string cone_report(const ReturningCone& cone) {
  std::string out = fmt::format("cycle: {}\nwall: {}\n", cone.cycle.str(), cone.cycle.wall_label());
  std::string coords;
  for (int v : cone.kept) coords += fmt::format("{}y{}", coords.empty() ? "" : ",", v + 1);
  out += fmt::format("coordinates: {}\n", coords);
  out += fmt::format("empty: {}\n", cone.empty ? "yes" : "no");
  out += fmt::format("rows generated: {}\nrows retained: {}\n", cone.generated.size(), cone.rows.size());
  for (const auto& row : cone.rows)
    out += fmt::format("  step {} ({}) exit y{}: {}\n", row.step + 1, cone.cycle.codes()[row.step].str(),
                       row.variable + 1, format_vector(row.coefficients, " "));
  return out;
}

}  // namespace glassnet
