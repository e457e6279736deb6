#pragma once

#include <cstdint>
#include <vector>

#include "glassnet/cones.hpp"
#include "glassnet/execution.hpp"
#include "glassnet/integrator.hpp"

namespace glassnet {

/// One loop of the integrator from a cycle's start wall back to that wall.
struct FirstReturn {
  bool returned = false;
  std::vector<OrthantCode> path;  // orthants visited, starting with the entered one
  Vector point;                   // full-dimensional point on the start wall
  double time = 0.0;
  Terminal terminal = Terminal::reached_max_transitions;  // why it stopped when not returned
};

/// Embeds reduced wall coordinates into R^n with the wall variable zero.
Vector embed_on_wall(const CycleSpec& cycle, const Vector& reduced);
Vector restrict_to_wall(const CycleSpec& cycle, const Vector& full);

/// Integrates from a point of the start wall until the flow crosses that wall
/// again in the same direction, or `max_transitions` events elapse.
FirstReturn first_return(const GlassNetwork& net, const CycleSpec& cycle, const Vector& reduced_point,
                         std::size_t max_transitions);

std::vector<FirstReturn> first_returns(const GlassNetwork& net, const CycleSpec& cycle,
                                       const std::vector<Vector>& reduced_points, std::size_t max_transitions,
                                       Execution execution = Execution::parallel);

std::vector<Membership> classify_points(const ReturningCone& cone, const std::vector<Vector>& points,
                                        Execution execution = Execution::parallel);

std::vector<Vector> apply_map(const FractionalLinearMap& map, const std::vector<Vector>& points,
                              Execution execution = Execution::parallel);

/// Random points strictly inside the octant with the given signs, l1 norm in (0.05, 2).
std::vector<Vector> sample_octant(const Vector& signs, std::size_t count, std::uint64_t seed);

/// Uniform random points inside a convex polygon (triangle-fan sampling).
std::vector<Point2> sample_polygon(const ConvexPolygon& polygon, std::size_t count, std::uint64_t seed);

}  // namespace glassnet
