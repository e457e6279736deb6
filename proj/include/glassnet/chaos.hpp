#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glassnet/batch.hpp"
#include "glassnet/orbit.hpp"

namespace glassnet {

/// Two cycles sharing a start wall, with their maps, cones and slice polygons.
struct SymbolSystem {
  std::array<CycleMap, 2> maps;
  std::array<ReturningCone, 2> cones;
  std::array<ConvexPolygon, 2> cone_polygons;
  std::array<ConvexPolygon, 2> images;  // M_a(C_a)
  Vector signs;
};

/// Throws PreconditionError unless both cycles start on the same wall, have
/// three wall coordinates and nonempty cones.
SymbolSystem build_symbol_system(const GlassNetwork& net, const CycleSpec& cycle0, const CycleSpec& cycle1);

/// Slice region of points that followed `word` (first symbol first) and now
/// sit in the cone of its last symbol: C_{s1}, then M_{s_k}(region) & C_{s_{k+1}}.
ConvexPolygon word_region(const SymbolSystem& system, const std::string& word);

/// Right-to-left composition: the first symbol acts first.
FractionalLinearMap composite_map(const std::string& word, const FractionalLinearMap& m0,
                                  const FractionalLinearMap& m1);

struct CompositeFixedPoint {
  std::string word;
  FractionalLinearMap map;
  Spectrum spectrum;
  std::optional<Vector> point;         // feasible fixed point, else the largest-eigenvalue one
  std::optional<double> lambda;
  bool feasible = false;               // every point of the loop lies in the right closed cone
  std::vector<Membership> chain;       // membership at each step of the loop
  std::optional<double> period;
  double residual = 0.0;               // ||M_word(y*) - y*||_inf
  std::optional<Point2> projected;
  std::optional<Stability> stability;
};

CompositeFixedPoint analyze_word(const SymbolSystem& system, const std::string& word);

struct RepulsionRegion {
  std::string name;
  ConvexPolygon polygon;
  int symbol = 0;  // the map acting on the region
};

struct RepulsionCorner {
  std::string region;
  Vector corner;  // on the slice, unit l1 norm
  double image_norm = 0.0;  // ||A Q||_1
  double phi_dot = 0.0;     // <phi, Q>
  double bound = 0.0;       // supremum of admissible k; +inf when unbounded
  bool fails = false;       // ||A Q||_1 <= 1 with nonpositive growth
};

struct RepulsionResult {
  double threshold = 0.0;  // k*, +inf when unbounded
  std::vector<RepulsionCorner> corners;
  bool failed = false;
};

/// Largest k* with ||M_j(k Q)||_1 > k for 0 < k < k* at every corner Q of every region.
RepulsionResult origin_repulsion_threshold(const std::vector<RepulsionRegion>& regions,
                                           const std::array<FractionalLinearMap, 2>& maps, const Vector& signs);

struct WordCheck {
  std::string word;
  bool realizable = false;
  double area = 0.0;
};

/// Observed loop statistics of a long trajectory at the shared start wall.
struct ItineraryCensus {
  std::size_t transitions = 0;
  std::size_t returns = 0;
  std::string symbols;                       // '0', '1' or 'x' per complete loop
  std::map<std::string, std::size_t> other;  // orthant sequences of loops outside both cycles
  Terminal terminal = Terminal::reached_max_transitions;
};

/// Splits a trajectory into loops between consecutive crossings of the start wall.
std::vector<std::vector<OrthantCode>> split_loops(const Trajectory& trajectory, const CycleSpec& wall_cycle);

ItineraryCensus itinerary_census(const GlassNetwork& net, const SymbolSystem& system, const Vector& start,
                                 std::size_t transitions);

struct HorseshoeReport {
  std::vector<CycleSpec> cycles;  // the two cycles, symbol order
  std::vector<std::pair<std::string, ConvexPolygon>> polygons;
  std::vector<std::pair<std::string, Point2>> marked_points;
  /// [a][b]: M_b(C_b) meets C_a with interior.
  std::array<std::array<bool, 2>, 2> image_overlap{};
  /// [a][b]: symbol b may be followed by a in a two-sided itinerary.
  std::array<std::array<bool, 2>, 2> transition_allowed{};
  std::vector<WordCheck> word_checks;
  std::vector<std::string> forbidden_words;
  double entropy = 0.0;
  std::vector<CompositeFixedPoint> composites;
  std::vector<RepulsionRegion> repulsion_regions;
  RepulsionResult repulsion;
  std::size_t corner_count = 0;
  ItineraryCensus census;
};

struct HorseshoeOptions {
  std::size_t census_transitions = 1000;
  std::optional<Vector> census_start;  // default: centroid of C_0 lifted onto the wall
};

HorseshoeReport horseshoe_report(const GlassNetwork& net, const CycleSpec& cycle0, const CycleSpec& cycle1,
                                 const HorseshoeOptions& options = {});

/// log of the spectral radius of a 0/1 transition matrix (0 when nilpotent).
double topological_entropy(const Matrix& transitions);

std::string horseshoe_text(const HorseshoeReport& report);

}  // namespace glassnet
