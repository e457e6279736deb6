#include "glassnet/chaos.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace glassnet {

SymbolSystem build_symbol_system(const GlassNetwork& net, const CycleSpec& cycle0, const CycleSpec& cycle1) {
  if (cycle0.wall_variable() != cycle1.wall_variable() || cycle0.entered() != cycle1.entered())
    throw PreconditionError(fmt::format("cycles start on different walls ({} vs {})", cycle0.wall_label(),
                                        cycle1.wall_label()));
  if (net.dimension() != 4) throw PreconditionError("the slice analysis needs a four-variable network");

  SymbolSystem s{{cycle_map(net, cycle0), cycle_map(net, cycle1)},
                 {returning_cone(net, cycle0), returning_cone(net, cycle1)},
                 {},
                 {},
                 {}};
  s.signs = s.maps[0].octant_signs();
  for (int a = 0; a < 2; ++a) {
    if (s.cones[a].empty) throw PreconditionError(fmt::format("returning cone of cycle {} is empty", a));
    s.cone_polygons[a] = cone_to_polygon(s.cones[a]);
    s.images[a] = map_polygon(s.maps[a].reduced, s.cone_polygons[a], s.signs);
  }
  return s;
}

namespace {

int symbol_of(char c) {
  if (c == '0') return 0;
  if (c == '1') return 1;
  throw PreconditionError(fmt::format("invalid symbol '{}'", c));
}

}  // namespace

ConvexPolygon word_region(const SymbolSystem& system, const std::string& word) {
  if (word.empty()) throw PreconditionError("empty word");
  int previous = symbol_of(word[0]);
  ConvexPolygon region = system.cone_polygons[previous];
  for (std::size_t k = 1; k < word.size(); ++k) {
    const int s = symbol_of(word[k]);
    region = map_polygon(system.maps[previous].reduced, region, system.signs).intersect(system.cone_polygons[s]);
    if (!region.has_interior()) return {};
    previous = s;
  }
  return region;
}

FractionalLinearMap composite_map(const std::string& word, const FractionalLinearMap& m0,
                                  const FractionalLinearMap& m1) {
  if (word.empty()) throw PreconditionError("empty word");
  FractionalLinearMap total = FractionalLinearMap::identity(m0.dimension());
  for (char c : word) total = compose(symbol_of(c) == 0 ? m0 : m1, total);
  return total;
}

CompositeFixedPoint analyze_word(const SymbolSystem& system, const std::string& word) {
  CompositeFixedPoint out{word, composite_map(word, system.maps[0].reduced, system.maps[1].reduced), {}, {}, {}, false,
                          {}, {}, 0.0, {}, {}};
  out.spectrum = real_eigenpairs(out.map.numerator());

  std::optional<std::size_t> best;
  std::optional<std::size_t> best_feasible;
  std::vector<std::vector<Membership>> chains(out.spectrum.real.size());
  std::vector<Vector> points(out.spectrum.real.size());
  for (std::size_t i = 0; i < out.spectrum.real.size(); ++i) {
    const auto fp = fixed_point_on_ray(out.map, out.spectrum.real[i]);
    if (fp.kind != FixedPointKind::fixed_point) continue;
    points[i] = fp.point;
    Vector y = fp.point;
    bool ok = true;
    for (char c : word) {
      const int s = symbol_of(c);
      const Membership m = cone_contains(system.cones[s], y);
      chains[i].push_back(m);
      if (m == Membership::outside) ok = false;
      if (!(system.maps[s].reduced.denominator_at(y) > 0.0)) {
        ok = false;
        break;
      }
      y = system.maps[s].reduced(y);
    }
    if (!best) best = i;
    if (ok && !best_feasible) best_feasible = i;
  }
  const auto chosen = best_feasible ? best_feasible : best;
  if (!chosen) return out;

  out.point = points[*chosen];
  out.lambda = out.spectrum.real[*chosen].value;
  out.feasible = best_feasible.has_value();
  out.chain = chains[*chosen];
  out.period = orbit_period(*out.lambda);
  out.residual = (out.map(*out.point) - *out.point).lpNorm<Eigen::Infinity>();
  if (system.signs.dot(*out.point) > 0.0) out.projected = project_to_slice(*out.point, system.signs);
  out.stability = classify_stability(out.spectrum, *chosen);
  return out;
}

RepulsionResult origin_repulsion_threshold(const std::vector<RepulsionRegion>& regions,
                                           const std::array<FractionalLinearMap, 2>& maps, const Vector& signs) {
  RepulsionResult result;
  result.threshold = std::numeric_limits<double>::infinity();
  for (const auto& region : regions) {
    const FractionalLinearMap& m = maps[static_cast<std::size_t>(region.symbol)];
    for (const auto& v : region.polygon.vertices()) {
      RepulsionCorner c;
      c.region = region.name;
      Vector q = lift_from_slice(v, signs);
      c.corner = q / q.lpNorm<1>();
      c.image_norm = (m.numerator() * c.corner).lpNorm<1>();
      c.phi_dot = m.denominator().dot(c.corner);
      // ||M(kQ)||_1 = k ||AQ||_1 / (1 + k <phi,Q>) > k  <=>  ||AQ||_1 - 1 > k <phi,Q>
      if (c.phi_dot > 0.0) {
        c.bound = (c.image_norm - 1.0) / c.phi_dot;
        c.fails = c.bound <= 0.0;
      } else if (c.image_norm > 1.0 || (c.image_norm == 1.0 && c.phi_dot < 0.0)) {
        c.bound = std::numeric_limits<double>::infinity();
      } else {
        c.bound = 0.0;
        c.fails = true;
      }
      if (c.fails) result.failed = true;
      result.threshold = std::min(result.threshold, std::max(c.bound, 0.0));
      result.corners.push_back(std::move(c));
    }
  }
  return result;
}

std::vector<std::vector<OrthantCode>> split_loops(const Trajectory& trajectory, const CycleSpec& wall_cycle) {
  const OrthantCode& entered = wall_cycle.entered();
  const OrthantCode& last = wall_cycle.codes().back();
  const int wall = wall_cycle.wall_variable();
  std::vector<std::vector<OrthantCode>> loops;
  std::vector<OrthantCode> current;
  bool collecting = trajectory.start[wall] == 0.0 && trajectory.start_orthant == entered;
  if (collecting) current.push_back(entered);
  for (const auto& e : trajectory.events) {
    if (e.from == last && e.to == entered) {
      if (collecting) loops.push_back(std::move(current));
      current = {entered};
      collecting = true;
    } else if (collecting) {
      current.push_back(e.to);
    }
  }
  return loops;
}

ItineraryCensus itinerary_census(const GlassNetwork& net, const SymbolSystem& system, const Vector& start,
                                 std::size_t transitions) {
  ItineraryCensus census;
  const CycleSpec& c0 = system.maps[0].cycle;
  const Trajectory traj = simulate(net, start, transitions, c0.entered());
  census.transitions = traj.events.size();
  census.terminal = traj.terminal;
  for (const auto& loop : split_loops(traj, c0)) {
    ++census.returns;
    if (loop == c0.codes()) {
      census.symbols += '0';
    } else if (loop == system.maps[1].cycle.codes()) {
      census.symbols += '1';
    } else {
      census.symbols += 'x';
      std::string key;
      for (const auto& code : loop) key += (key.empty() ? "" : ",") + code.str();
      ++census.other[key];
    }
  }
  return census;
}

double topological_entropy(const Matrix& transitions) {
  const Spectrum s = real_eigenpairs(transitions);
  const double radius = s.eigenvalues.empty() ? 0.0 : std::abs(s.eigenvalues.front());
  return radius >= 1.0 ? std::log(radius) : 0.0;
}

namespace {

std::string name_image(int b) { return fmt::format("M{}(C{})", b, b); }

}  // namespace

HorseshoeReport horseshoe_report(const GlassNetwork& net, const CycleSpec& cycle0, const CycleSpec& cycle1,
                                 const HorseshoeOptions& options) {
  const SymbolSystem sys = build_symbol_system(net, cycle0, cycle1);
  HorseshoeReport r;
  r.cycles = {cycle0, cycle1};

  r.polygons.emplace_back("C0", sys.cone_polygons[0]);
  r.polygons.emplace_back("C1", sys.cone_polygons[1]);
  r.polygons.emplace_back(name_image(0), sys.images[0]);
  r.polygons.emplace_back(name_image(1), sys.images[1]);
  r.polygons.emplace_back("C0&C1", sys.cone_polygons[0].intersect(sys.cone_polygons[1]));
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a) {
      ConvexPolygon overlap = sys.images[b].intersect(sys.cone_polygons[a]);
      r.image_overlap[a][b] = overlap.has_interior();
      r.polygons.emplace_back(fmt::format("{}&C{}", name_image(b), a), std::move(overlap));
    }

  for (int a = 0; a < 2; ++a) {
    const Spectrum s = real_eigenpairs(sys.maps[a].A());
    for (std::size_t i = 0; i < s.real.size(); ++i) {
      const Vector& v = s.real[i].vector;
      const double side = sys.signs.dot(v);
      if (side == 0.0) continue;
      r.marked_points.emplace_back(fmt::format("A{}.v{}", a, i + 1),
                                   project_to_slice(side > 0.0 ? v : Vector(-v), sys.signs));
    }
  }

  const std::vector<std::string> words = {"00", "01", "10", "11", "000", "001", "010", "011",
                                          "100", "101", "110", "111"};
  std::map<std::string, bool> realizable;
  for (const auto& w : words) {
    const ConvexPolygon region = word_region(sys, w);
    realizable[w] = region.has_interior();
    r.word_checks.push_back({w, realizable[w], region.area()});
  }
  // ab is forbidden when no non-constant one-symbol history c.ab is realizable
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const std::string w = fmt::format("{}{}", a, b);
      bool allowed = false;
      if (realizable[w]) {
        for (int c = 0; c < 2; ++c) {
          const std::string h = fmt::format("{}{}", c, w);
          if (h == "000" || h == "111") continue;
          allowed = allowed || realizable[h];
        }
      }
      r.transition_allowed[b][a] = allowed;
      if (!allowed) r.forbidden_words.push_back(w);
    }

  Matrix t(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) t(a, b) = r.transition_allowed[a][b] ? 1.0 : 0.0;
  r.entropy = topological_entropy(t);

  for (const std::string w : {"0", "1", "01", "10", "00", "11", "011", "101", "110"}) {
    r.composites.push_back(analyze_word(sys, w));
    const auto& c = r.composites.back();
    if (c.feasible && c.projected && w.size() > 1) r.marked_points.emplace_back("fixed." + w, *c.projected);
  }

  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a)
      if (r.transition_allowed[a][b])
        r.repulsion_regions.push_back(
            {fmt::format("{}&C{}", name_image(b), a), sys.images[b].intersect(sys.cone_polygons[a]), a});
  r.repulsion = origin_repulsion_threshold(r.repulsion_regions, {sys.maps[0].reduced, sys.maps[1].reduced}, sys.signs);
  r.corner_count = r.repulsion.corners.size();

  Vector start;
  if (options.census_start) {
    start = *options.census_start;
  } else {
    start = embed_on_wall(cycle0, lift_from_slice(sys.cone_polygons[0].centroid(), sys.signs));
  }
  r.census = itinerary_census(net, sys, start, options.census_transitions);
  return r;
}

namespace {

std::string vec_text(const Vector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_fixed(v[i]);
  return out + ")";
}

}  // namespace

std::string horseshoe_text(const HorseshoeReport& r) {
  std::string out;
  out += fmt::format("cycle 0: {}\ncycle 1: {}\nwall: {}\n", r.cycles[0].str(), r.cycles[1].str(),
                     r.cycles[0].wall_label());
  out += "polygons:\n";
  for (const auto& [name, poly] : r.polygons) {
    out += fmt::format("  {}: {} area {:.12f}", name, to_string(poly.shape()), poly.area());
    for (const auto& v : poly.vertices()) out += fmt::format(" ({}, {})", format_fixed(v.x), format_fixed(v.y));
    out += "\n";
  }
  out += "marked points:\n";
  for (const auto& [name, p] : r.marked_points) out += fmt::format("  {}: ({}, {})\n", name, format_fixed(p.x), format_fixed(p.y));
  out += "image overlap [a][b] (M_b(C_b) meets C_a):\n";
  for (int a = 0; a < 2; ++a) out += fmt::format("  {} {}\n", int(r.image_overlap[a][0]), int(r.image_overlap[a][1]));
  out += "word regions:\n";
  for (const auto& w : r.word_checks)
    out += fmt::format("  {}: {} (area {:.12f})\n", w.word, w.realizable ? "realizable" : "empty", w.area);
  out += "transition matrix [a][b] (b then a):\n";
  for (int a = 0; a < 2; ++a)
    out += fmt::format("  {} {}\n", int(r.transition_allowed[a][0]), int(r.transition_allowed[a][1]));
  for (const auto& w : r.forbidden_words) out += fmt::format("forbidden word: {}\n", w);
  out += fmt::format("topological entropy: {:.10f}\n", r.entropy);
  out += "composite fixed points:\n";
  for (const auto& c : r.composites) {
    if (!c.point) {
      out += fmt::format("  word {}: no fixed point\n", c.word);
      continue;
    }
    out += fmt::format("  word {}: lambda {:.10f}, y* {}, {}, residual {:.3e}, period {:.10f}, {}", c.word,
                       *c.lambda, vec_text(*c.point), c.feasible ? "feasible" : "infeasible", c.residual, *c.period,
                       to_string(*c.stability));
    if (c.projected) out += fmt::format(", slice ({:.10f}, {:.10f})", c.projected->x, c.projected->y);
    out += "\n";
  }
  out += "repulsion regions:\n";
  for (const auto& reg : r.repulsion_regions)
    out += fmt::format("  {} under M{}: {} corners\n", reg.name, reg.symbol, reg.polygon.vertices().size());
  out += fmt::format("corners: {}\n", r.corner_count);
  for (const auto& c : r.repulsion.corners)
    out += fmt::format("  {} Q {}: |AQ|_1 {:.10f}, <phi,Q> {:.10f}, bound {:.12f}{}\n", c.region, vec_text(c.corner),
                       c.image_norm, c.phi_dot, c.bound, c.fails ? " FAILS" : "");
  out += fmt::format("repulsion threshold k*: {:.15f}{}\n", r.repulsion.threshold,
                     r.repulsion.failed ? " (repulsion fails at some corner)" : "");
  out += fmt::format("itinerary census: {} transitions, {} returns, terminal {}\n", r.census.transitions,
                     r.census.returns, to_string(r.census.terminal));
  out += fmt::format("  symbols: {}\n", r.census.symbols);
  for (const auto& [loop, count] : r.census.other) out += fmt::format("  other cycle x{}: {}\n", count, loop);
  return out;
}

}  // namespace glassnet
