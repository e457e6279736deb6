#pragma once

#include <complex>
#include <string>
#include <vector>

#include "glassnet/network.hpp"
#include "glassnet/transition_graph.hpp"

namespace glassnet {

/// y -> B y / (1 + <psi, y>)
class FractionalLinearMap {
public:
  FractionalLinearMap(Matrix numerator, Vector denominator);
  static FractionalLinearMap identity(int dimension);

  const Matrix& numerator() const { return numerator_; }
  const Vector& denominator() const { return denominator_; }
  int dimension() const { return static_cast<int>(denominator_.size()); }

  double denominator_at(const Vector& y) const { return 1.0 + denominator_.dot(y); }
  Vector operator()(const Vector& y) const { return numerator_ * y / denominator_at(y); }

private:
  Matrix numerator_;
  Vector denominator_;
};

/// Map from the wall entering `entered` to the wall y_variable = 0 leaving it.
FractionalLinearMap wall_map(const GlassNetwork& net, const OrthantCode& entered, int variable);

/// outer o inner.
FractionalLinearMap compose(const FractionalLinearMap& outer, const FractionalLinearMap& inner);

/// Drops row and column `drop_index`. Unless the coordinate is structurally
/// zero on the map's domain, column `drop_index` must vanish off the diagonal.
FractionalLinearMap reduce_map(const FractionalLinearMap& map, int drop_index, bool structurally_zero);

/// Return map of a cycle on its start wall.
struct CycleMap {
  CycleSpec cycle;
  std::vector<FractionalLinearMap> steps;  // wall maps in trajectory order
  FractionalLinearMap full;                // n x n composition
  FractionalLinearMap reduced;             // (n-1) x (n-1): the pair (A, phi)
  std::vector<int> kept;                   // reduced coordinate -> original variable

  const Matrix& A() const { return reduced.numerator(); }
  const Vector& phi() const { return reduced.denominator(); }

  int wall_variable() const { return cycle.wall_variable(); }
  /// Reduced wall coordinates -> point of R^n with the wall variable zero.
  Vector embed(const Vector& reduced_point) const;
  Vector restrict(const Vector& full_point) const;
  /// +1/-1 sign of each reduced coordinate in the entered orthant.
  Vector octant_signs() const;
};

CycleMap cycle_map(const GlassNetwork& net, const CycleSpec& cycle);

struct EigenPair {
  double value = 0.0;
  Vector vector;  // unit l1 norm, largest-magnitude component positive
};

struct Spectrum {
  std::vector<EigenPair> real;                   // descending |value|
  std::vector<std::complex<double>> eigenvalues;  // all, with multiplicity, descending modulus
};

class EigenSolverError : public Error {
public:
  using Error::Error;
};

/// Real eigenpairs of a small dense matrix. Size <= 3 uses the characteristic
/// polynomial in closed form; larger sizes use a Hessenberg QR solver.
Spectrum real_eigenpairs(const Matrix& A);

/// Scales to unit l1 norm with the largest-magnitude component positive.
Vector normalize_eigenvector(const Vector& v);

enum class FixedPointKind { fixed_point, origin_only, none, degenerate_direction };

std::string to_string(FixedPointKind kind);

struct FixedPointResult {
  FixedPointKind kind = FixedPointKind::none;
  Vector point;  // set for fixed_point
};

/// Non-zero fixed point of y -> A y / (1 + <phi, y>) on the ray of `pair`:
/// y* = (lambda - 1) v / <phi, v> when lambda > 1.
FixedPointResult fixed_point_on_ray(const FractionalLinearMap& map, const EigenPair& pair);

enum class Stability { asymptotically_stable, neutrally_stable, unstable };

std::string to_string(Stability stability);

/// Stability of the fixed point carried by spectrum.real[chosen].
Stability classify_stability(const Spectrum& spectrum, std::size_t chosen);

/// Period log(lambda) of the periodic orbit through a fixed point; lambda > 1.
double orbit_period(double lambda);

}  // namespace glassnet
