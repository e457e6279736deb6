#pragma once

#include "glassnet/common.hpp"

namespace glassnet {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  Vector x;
};

/// Dense two-phase simplex with Bland's rule:
/// minimize c'x subject to A x = b, x >= 0. Sized for a few dozen variables.
LpResult minimize_lp(const Vector& c, const Matrix& A, const Vector& b);

}  // namespace glassnet
