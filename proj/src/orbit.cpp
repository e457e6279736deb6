#include "glassnet/orbit.hpp"

#include <fmt/format.h>

namespace glassnet {

OrbitAnalysis analyze_orbit(const GlassNetwork& net, const CycleSpec& cycle) {
  OrbitAnalysis a{cycle_map(net, cycle), returning_cone(net, cycle), {}, {}, {}, {}, false, false, {}, {}, {}};
  a.spectrum = real_eigenpairs(a.map.A());
  const Vector signs = a.map.octant_signs();

  for (const auto& pair : a.spectrum.real) {
    RayCandidate cand{pair, fixed_point_on_ray(a.map.reduced, pair), Membership::outside};
    if (cand.fixed.kind == FixedPointKind::fixed_point) {
      cand.membership = cone_contains(a.cone, cand.fixed.point);
    } else {
      const double side = signs.dot(pair.vector);
      if (side != 0.0) cand.membership = cone_contains(a.cone, side > 0.0 ? pair.vector : Vector(-pair.vector));
    }
    a.candidates.push_back(std::move(cand));
  }

  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    const auto& c = a.candidates[i];
    if (c.fixed.kind != FixedPointKind::fixed_point || c.membership == Membership::outside) continue;
    if (a.fixed_index && a.candidates[*a.fixed_index].pair.value >= c.pair.value) continue;
    a.fixed_index = i;
  }
  if (a.fixed_index) {
    const auto& c = a.candidates[*a.fixed_index];
    a.fixed_point = c.fixed.point;
    a.feasible = true;
    a.on_boundary = c.membership == Membership::boundary;
    a.classified_index = a.fixed_index;
    a.period = orbit_period(c.pair.value);
  } else {
    for (std::size_t i = 0; i < a.candidates.size(); ++i) {
      const auto& c = a.candidates[i];
      if (c.fixed.kind != FixedPointKind::origin_only || c.membership == Membership::outside) continue;
      a.classified_index = i;
      break;
    }
  }
  if (a.classified_index) a.stability = classify_stability(a.spectrum, *a.classified_index);
  return a;
}

namespace {

std::string matrix_text(const Matrix& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += " ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) out += " " + format_number(m(r, c));
    out += "\n";
  }
  return out;
}

std::string fixed_vector(const Vector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_fixed(v[i]);
  return out + ")";
}

}  // namespace

std::string orbit_report(const OrbitAnalysis& a) {
  std::string out;
  out += fmt::format("cycle: {}\n", a.map.cycle.str());
  out += fmt::format("wall: {} (y{} = 0, entering {})\n", a.map.cycle.wall_label(), a.map.wall_variable() + 1,
                     a.map.cycle.entered().str());
  std::string coords;
  for (int v : a.map.kept) coords += fmt::format("{}y{}", coords.empty() ? "" : ",", v + 1);
  out += fmt::format("coordinates: {}\n", coords);
  out += "A:\n" + matrix_text(a.map.A());
  out += fmt::format("phi: {}\n", format_vector(a.map.phi(), " "));
  out += "eigenvalues:";
  for (const auto& mu : a.spectrum.eigenvalues) {
    if (mu.imag() == 0.0)
      out += fmt::format(" {:.10f}", mu.real());
    else
      out += fmt::format(" {:.10f}{:+.10f}i", mu.real(), mu.imag());
  }
  out += "\n";
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    const auto& c = a.candidates[i];
    out += fmt::format("eigenpair {}: lambda = {:.10f}, v = {}, ray: {}", i + 1, c.pair.value,
                       fixed_vector(c.pair.vector), to_string(c.fixed.kind));
    if (c.fixed.kind == FixedPointKind::fixed_point) out += " " + fixed_vector(c.fixed.point);
    out += fmt::format(", cone: {}\n", to_string(c.membership));
  }
  out += fmt::format("returning cone: {} ({} rows retained of {})\n", a.cone.empty ? "empty" : "nonempty",
                     a.cone.rows.size(), a.cone.generated.size());
  if (a.fixed_point) {
    out += fmt::format("fixed point: {}\n", fixed_vector(*a.fixed_point));
    out += fmt::format("feasible: yes{}\n", a.on_boundary ? " (boundary)" : "");
  } else {
    out += "fixed point: none\nfeasible: no\n";
  }
  if (a.stability)
    out += fmt::format("stability: {} (lambda = {:.10f})\n", to_string(*a.stability),
                       a.spectrum.real[*a.classified_index].value);
  else
    out += "stability: no invariant ray in the cone\n";
  if (a.period)
    out += fmt::format("period: {:.10f}\n", *a.period);
  else
    out += "period: none\n";
  return out;
}

}  // namespace glassnet
