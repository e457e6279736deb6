#pragma once

#include <string>
#include <vector>

#include "glassnet/cycle_maps.hpp"
#include "glassnet/polygon.hpp"

namespace glassnet {

/// One alternate-exit constraint row . y >= 0 in reduced wall coordinates.
struct ConeRow {
  Vector coefficients;
  std::size_t step = 0;  // index into the cycle's codes (0-based)
  int variable = 0;      // alternate exit variable (0-based)
};

/// Wall points whose trajectories follow a cycle back to its start wall.
struct ReturningCone {
  CycleSpec cycle;
  std::vector<int> kept;             // reduced coordinate -> original variable
  Vector signs;                      // octant sign of each reduced coordinate
  std::vector<ConeRow> rows;         // retained rows
  std::vector<ConeRow> generated;    // every row before pruning
  bool empty = false;                // no interior on the wall
};

enum class RedundancyMethod { automatic, slice, lp };

/// Builds the row -e_i' B(k) ... B(0) / f_i(k) for every alternate exit i at
/// every step k, in wall coordinates.
ReturningCone returning_cone(const GlassNetwork& net, const CycleSpec& cycle, bool prune = true,
                             RedundancyMethod method = RedundancyMethod::automatic);

/// Drops rows implied by the remaining rows plus the closed octant. Rows are
/// tested one at a time against the rows still retained.
std::vector<ConeRow> remove_redundant(const std::vector<ConeRow>& rows, const Vector& signs,
                                      RedundancyMethod method = RedundancyMethod::automatic);

/// True when {y : rows . y >= 0, y in the closed octant} has interior.
bool cone_has_interior(const std::vector<ConeRow>& rows, const Vector& signs,
                       RedundancyMethod method = RedundancyMethod::automatic);

enum class Membership { interior, boundary, outside };

std::string to_string(Membership membership);

inline constexpr double kMembershipTolerance = 1e-9;

/// Classifies y (wall coordinates) against the octant and the retained rows,
/// each row scaled to unit l1 norm; tolerance is relative to ||y||_1.
Membership cone_contains(const ReturningCone& cone, const Vector& y, double tolerance = kMembershipTolerance);
Membership cone_contains(const std::vector<ConeRow>& rows, const Vector& signs, const Vector& y,
                         double tolerance = kMembershipTolerance);

/// Scales y onto <signs, y> = 1 and returns its last two coordinates.
Point2 project_to_slice(const Vector& y, const Vector& signs);
/// Inverse of project_to_slice on the slice plane (three reduced coordinates).
Vector lift_from_slice(const Point2& p, const Vector& signs);

/// The half-plane of the slice where row . y >= 0.
HalfPlane slice_half_plane(const Vector& row, const Vector& signs);

/// The octant's slice: a triangle with one vertex at the origin.
ConvexPolygon slice_triangle(const Vector& signs);

/// The cone cut by the slice plane; three reduced coordinates only.
ConvexPolygon cone_to_polygon(const ReturningCone& cone);
ConvexPolygon cone_to_polygon(const std::vector<ConeRow>& rows, const Vector& signs);

class ProjectiveFoldError : public Error {
public:
  using Error::Error;
};

/// Image of a slice polygon under a reduced map, re-projected onto the slice.
ConvexPolygon map_polygon(const FractionalLinearMap& map, const ConvexPolygon& polygon, const Vector& signs);

/// Text listing of the retained rows with their step and exit variable.
std::string cone_report(const ReturningCone& cone);

}  // namespace glassnet
