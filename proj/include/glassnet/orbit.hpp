#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glassnet/cones.hpp"

namespace glassnet {

/// A real eigen-direction of A with its fixed-point verdict.
struct RayCandidate {
  EigenPair pair;
  FixedPointResult fixed;
  /// Cone membership of the fixed point, or of the ray direction when there is none.
  Membership membership = Membership::outside;
};

/// Existence, feasibility, stability and period of the periodic orbit of a cycle.
struct OrbitAnalysis {
  CycleMap map;
  ReturningCone cone;
  Spectrum spectrum;
  std::vector<RayCandidate> candidates;  // parallel to spectrum.real

  /// Index into spectrum.real of the eigenvalue carrying the fixed point.
  std::optional<std::size_t> fixed_index;
  std::optional<Vector> fixed_point;
  bool feasible = false;
  bool on_boundary = false;  // fixed point on the closed cone's boundary

  /// Index of the invariant ray that was classified: the fixed point's, or the
  /// largest eigenvalue >= 1 whose ray lies in the closed cone.
  std::optional<std::size_t> classified_index;
  std::optional<Stability> stability;
  std::optional<double> period;
};

OrbitAnalysis analyze_orbit(const GlassNetwork& net, const CycleSpec& cycle);

/// Structured text: matrices row-major, eigenpairs, verdicts.
std::string orbit_report(const OrbitAnalysis& analysis);

}  // namespace glassnet
