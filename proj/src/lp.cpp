#include "glassnet/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace glassnet {

namespace {

constexpr double kPivotTolerance = 1e-11;

struct Tableau {
  Matrix t;  // rows 0..m-1 constraints, row m objective (reduced costs); last column rhs
  std::vector<Eigen::Index> basis;

  Eigen::Index rows() const { return t.rows() - 1; }
  Eigen::Index rhs() const { return t.cols() - 1; }

  void pivot(Eigen::Index r, Eigen::Index c) {
    t.row(r) /= t(r, c);
    for (Eigen::Index i = 0; i < t.rows(); ++i)
      if (i != r && t(i, c) != 0.0) t.row(i) -= t(i, c) * t.row(r);
    basis[static_cast<std::size_t>(r)] = c;
  }

  // Returns false when unbounded. Only columns < usable may enter.
  bool run(Eigen::Index usable) {
    for (int guard = 0; guard < 100000; ++guard) {
      Eigen::Index enter = -1;
      for (Eigen::Index c = 0; c < usable; ++c)
        if (t(rows(), c) < -kPivotTolerance) {
          enter = c;
          break;
        }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index r = 0; r < rows(); ++r) {
        if (t(r, enter) <= kPivotTolerance) continue;
        const double ratio = t(r, rhs()) / t(r, enter);
        if (ratio < best - 1e-14 ||
            (std::abs(ratio - best) <= 1e-14 && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    throw Error("simplex iteration limit reached");
  }
};

}  // namespace

LpResult minimize_lp(const Vector& c, const Matrix& A, const Vector& b) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  if (c.size() != n || b.size() != m) throw PreconditionError("LP dimensions do not match");

  // columns: x (n), artificials (m), rhs
  Tableau tab;
  tab.t = Matrix::Zero(m + 1, n + m + 1);
  tab.basis.resize(static_cast<std::size_t>(m));
  for (Eigen::Index r = 0; r < m; ++r) {
    const double s = b[r] < 0.0 ? -1.0 : 1.0;
    tab.t.block(r, 0, 1, n) = s * A.row(r);
    tab.t(r, n + r) = 1.0;
    tab.t(r, n + m) = s * b[r];
    tab.basis[static_cast<std::size_t>(r)] = n + r;
  }
  // phase 1: minimize the sum of artificials
  for (Eigen::Index r = 0; r < m; ++r) tab.t.row(m) -= tab.t.row(r);
  for (Eigen::Index r = 0; r < m; ++r) tab.t(m, n + r) = 0.0;
  tab.run(n + m);

  const double scale = std::max(1.0, b.lpNorm<Eigen::Infinity>());
  LpResult result;
  if (-tab.t(m, n + m) > 1e-9 * scale) {
    result.status = LpStatus::infeasible;
    return result;
  }
  // drive remaining artificials out of the basis
  for (Eigen::Index r = 0; r < m; ++r) {
    if (tab.basis[static_cast<std::size_t>(r)] < n) continue;
    for (Eigen::Index col = 0; col < n; ++col)
      if (std::abs(tab.t(r, col)) > kPivotTolerance) {
        tab.pivot(r, col);
        break;
      }
  }

  // phase 2 objective in terms of the current basis; artificials barred from entering
  tab.t.row(m).setZero();
  tab.t.block(m, 0, 1, n) = c.transpose();
  for (Eigen::Index r = 0; r < m; ++r) {
    const Eigen::Index bc = tab.basis[static_cast<std::size_t>(r)];
    if (bc < n && tab.t(m, bc) != 0.0) tab.t.row(m) -= tab.t(m, bc) * tab.t.row(r);
  }
  if (!tab.run(n)) {
    result.status = LpStatus::unbounded;
    return result;
  }

  result.status = LpStatus::optimal;
  result.x = Vector::Zero(n);
  for (Eigen::Index r = 0; r < m; ++r) {
    const Eigen::Index bc = tab.basis[static_cast<std::size_t>(r)];
    if (bc < n) result.x[bc] = tab.t(r, n + m);
  }
  result.value = c.dot(result.x);
  return result;
}

}  // namespace glassnet
