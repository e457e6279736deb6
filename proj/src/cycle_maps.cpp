#include "glassnet/cycle_maps.hpp"

#include <cmath>

#include <fmt/format.h>

namespace glassnet {

FractionalLinearMap::FractionalLinearMap(Matrix numerator, Vector denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_.rows() != numerator_.cols() || numerator_.rows() != denominator_.size())
    throw PreconditionError("fractional-linear map needs a square numerator matching the denominator vector");
}

FractionalLinearMap FractionalLinearMap::identity(int dimension) {
  return {Matrix::Identity(dimension, dimension), Vector::Zero(dimension)};
}

FractionalLinearMap wall_map(const GlassNetwork& net, const OrthantCode& entered, int variable) {
  const int n = net.dimension();
  if (variable < 0 || variable >= n) throw PreconditionError("switching variable out of range");
  const Vector& f = net.focal_point(entered);
  const double fj = f[variable];
  Matrix B = Matrix::Identity(n, n);
  B.col(variable) -= f / fj;
  Vector psi = Vector::Zero(n);
  psi[variable] = -1.0 / fj;
  return {std::move(B), std::move(psi)};
}

FractionalLinearMap compose(const FractionalLinearMap& outer, const FractionalLinearMap& inner) {
  if (outer.dimension() != inner.dimension()) throw PreconditionError("composing maps of different dimension");
  // outer(inner(y)) = B_o B_i y / (1 + <psi_i, y> + <psi_o, B_i y>)
  return {outer.numerator() * inner.numerator(),
          inner.denominator() + inner.numerator().transpose() * outer.denominator()};
}

namespace {

Matrix drop_row_col(const Matrix& m, int k) {
  const auto n = m.rows();
  Matrix out(n - 1, n - 1);
  for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
    if (r == k) continue;
    for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
      if (c == k) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

FractionalLinearMap reduce_map(const FractionalLinearMap& map, int drop_index, bool structurally_zero) {
  const int n = map.dimension();
  if (n < 2 || drop_index < 0 || drop_index >= n) throw PreconditionError("reduce_map: index out of range");
  if (!structurally_zero) {
    for (int r = 0; r < n; ++r)
      if (r != drop_index && map.numerator()(r, drop_index) != 0.0)
        throw PreconditionError(fmt::format(
            "reduce_map: coordinate {} feeds other rows but is not structurally zero on the domain", drop_index + 1));
    if (map.denominator()[drop_index] != 0.0)
      throw PreconditionError(fmt::format(
          "reduce_map: coordinate {} enters the denominator but is not structurally zero on the domain",
          drop_index + 1));
  }
  Vector psi(n - 1);
  for (int i = 0, k = 0; i < n; ++i)
    if (i != drop_index) psi[k++] = map.denominator()[i];
  return {drop_row_col(map.numerator(), drop_index), std::move(psi)};
}

Vector CycleMap::embed(const Vector& reduced_point) const {
  Vector y = Vector::Zero(cycle.dimension());
  for (std::size_t k = 0; k < kept.size(); ++k) y[kept[k]] = reduced_point[static_cast<Eigen::Index>(k)];
  return y;
}

Vector CycleMap::restrict(const Vector& full_point) const {
  Vector r(static_cast<Eigen::Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) r[static_cast<Eigen::Index>(k)] = full_point[kept[k]];
  return r;
}

Vector CycleMap::octant_signs() const {
  Vector s(static_cast<Eigen::Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) s[static_cast<Eigen::Index>(k)] = cycle.entered().sign(kept[k]);
  return s;
}

CycleMap cycle_map(const GlassNetwork& net, const CycleSpec& cycle) {
  const int n = net.dimension();
  if (cycle.dimension() != n) throw PreconditionError("cycle dimension does not match network");
  if (n < 2) throw PreconditionError("cycle maps need dimension at least 2");

  std::vector<FractionalLinearMap> steps;
  FractionalLinearMap total = FractionalLinearMap::identity(n);
  for (std::size_t k = 0; k < cycle.length(); ++k) {
    const OrthantCode& code = cycle.codes()[k];
    const int j = cycle.switches()[k];
    if (net.focal_point(code)[j] * code.sign(j) > 0.0)
      throw PreconditionError(
          fmt::format("cycle step {} -> {} is not a transition of the network", code.str(), code.flipped(j).str()));
    steps.push_back(wall_map(net, code, j));
    total = compose(steps.back(), total);
  }

  const int wall = cycle.wall_variable();
  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (i != wall) kept.push_back(i);
  FractionalLinearMap reduced = reduce_map(total, wall, true);
  return CycleMap{cycle, std::move(steps), std::move(total), std::move(reduced), std::move(kept)};
}

std::string to_string(FixedPointKind kind) {
  switch (kind) {
    case FixedPointKind::fixed_point: return "fixed point";
    case FixedPointKind::origin_only: return "origin only";
    case FixedPointKind::none: return "none";
    case FixedPointKind::degenerate_direction: return "degenerate direction";
  }
  return "unknown";
}

namespace {
constexpr double kUnitEigenTolerance = 1e-9;
}

FixedPointResult fixed_point_on_ray(const FractionalLinearMap& map, const EigenPair& pair) {
  FixedPointResult result;
  const double lambda = pair.value;
  if (std::abs(lambda - 1.0) <= kUnitEigenTolerance) {
    result.kind = FixedPointKind::origin_only;
    return result;
  }
  if (lambda < 1.0) return result;
  const double denom = map.denominator().dot(pair.vector);
  if (std::abs(denom) <= 1e-14 * pair.vector.lpNorm<1>() * std::max(1.0, map.denominator().lpNorm<Eigen::Infinity>())) {
    result.kind = FixedPointKind::degenerate_direction;
    return result;
  }
  result.kind = FixedPointKind::fixed_point;
  result.point = (lambda - 1.0) * pair.vector / denom;
  return result;
}

std::string to_string(Stability stability) {
  switch (stability) {
    case Stability::asymptotically_stable: return "asymptotically stable";
    case Stability::neutrally_stable: return "neutrally stable";
    case Stability::unstable: return "unstable";
  }
  return "unknown";
}

Stability classify_stability(const Spectrum& spectrum, std::size_t chosen) {
  if (chosen >= spectrum.real.size()) throw PreconditionError("chosen eigenpair out of range");
  const double lambda = spectrum.real[chosen].value;
  const double tol = 1e-9 * std::max(1.0, std::abs(lambda));
  bool skipped_self = false;
  bool tie = false;
  for (const auto& mu : spectrum.eigenvalues) {
    if (!skipped_self && std::abs(mu - std::complex<double>(lambda, 0.0)) <= tol) {
      skipped_self = true;
      continue;
    }
    const double m = std::abs(mu);
    if (m > lambda + tol) return Stability::unstable;
    if (std::abs(m - lambda) <= tol) tie = true;
  }
  return tie ? Stability::neutrally_stable : Stability::asymptotically_stable;
}

double orbit_period(double lambda) {
  if (!(lambda > 1.0)) throw PreconditionError(fmt::format("period needs eigenvalue > 1, got {}", lambda));
  return std::log(lambda);
}

}  // namespace glassnet
