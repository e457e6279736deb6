#include "glassnet/integrator.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace glassnet {

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    compensation_ += (sum_ - t) + x;
  else
    compensation_ += (x - t) + sum_;
  sum_ = t;
}

std::string to_string(Terminal terminal) {
  switch (terminal) {
    case Terminal::reached_max_transitions: return "reached_max_transitions";
    case Terminal::converged_to_focal_point: return "converged_to_focal_point";
    case Terminal::degenerate_event: return "degenerate_event";
  }
  return "unknown";
}

Step next_transition(const GlassNetwork& net, const Vector& y, const OrthantCode& code) {
  const Vector& f = net.focal_point(code);
  const int n = net.dimension();
  if (y.size() != n) throw PreconditionError("state has wrong dimension");

  struct Candidate {
    double time;
    int variable;
  };
  std::vector<Candidate> candidates;
  for (int j = 0; j < n; ++j) {
    const int s = code.sign(j);
    if (y[j] * s < 0.0)
      throw PreconditionError(fmt::format("state component y{} has the wrong sign for orthant {}", j + 1, code.str()));
    if (f[j] * s > 0.0) continue;  // focal on the same side: y_j never reaches 0
    if (y[j] == 0.0) {
      // flow leaves through the wall it sits on (only possible without Condition 2)
      Step sliding;
      sliding.kind = StepKind::degenerate;
      sliding.tied = {j};
      return sliding;
    }
    // e^{-t} = f_j / (f_j - y_j)  =>  t = log(1 - y_j / f_j)
    candidates.push_back({std::log1p(-y[j] / f[j]), j});
  }

  Step step;
  if (candidates.empty()) {
    step.kind = StepKind::converged;
    return step;
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.time < b.time || (a.time == b.time && a.variable < b.variable); });

  const Candidate& first = candidates.front();
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    if (candidates[k].time - first.time > kTieTolerance * std::max(1.0, first.time)) break;
    if (step.tied.empty()) step.tied.push_back(first.variable);
    step.tied.push_back(candidates[k].variable);
  }
  if (!step.tied.empty()) {
    step.kind = StepKind::degenerate;
    return step;
  }

  const int j = first.variable;
  const double decay = f[j] / (f[j] - y[j]);
  step.kind = StepKind::crossing;
  step.duration = first.time;
  step.variable = j;
  step.exit_point = f + (y - f) * decay;
  step.exit_point[j] = 0.0;
  return step;
}

namespace {

OrthantCode resolve_start(const GlassNetwork& net, const Vector& start, const std::optional<OrthantCode>& entering) {
  const int n = net.dimension();
  if (start.size() != n) throw PreconditionError("start point has wrong dimension");
  const bool on_wall = (start.array() == 0.0).any();
  if (!on_wall) {
    const OrthantCode code = OrthantCode::of_point(start);
    if (entering && *entering != code)
      throw PreconditionError(fmt::format("start lies in orthant {}, not {}", code.str(), entering->str()));
    return code;
  }
  if (!entering) throw PreconditionError("start lies on a wall; the entering orthant must be given");
  const OrthantCode code = *entering;
  if (code.dimension() != n) throw PreconditionError("entering orthant has wrong dimension");
  const Vector& f = net.focal_point(code);
  for (int i = 0; i < n; ++i) {
    if (start[i] != 0.0) {
      if (start[i] * code.sign(i) < 0.0)
        throw PreconditionError(fmt::format("start component y{} disagrees with orthant {}", i + 1, code.str()));
    } else if (f[i] * code.sign(i) < 0.0) {
      throw PreconditionError(
          fmt::format("flow across wall y{} = 0 leaves orthant {} instead of entering it", i + 1, code.str()));
    }
  }
  return code;
}

}  // namespace

Trajectory simulate(const GlassNetwork& net, const Vector& start, std::size_t max_transitions,
                    std::optional<OrthantCode> entering) {
  Trajectory traj;
  traj.start = start;
  traj.start_orthant = resolve_start(net, start, entering);
  traj.events.reserve(std::min<std::size_t>(max_transitions, 1u << 16));

  Vector y = start;
  OrthantCode code = traj.start_orthant;
  CompensatedSum clock;
  while (traj.events.size() < max_transitions) {
    Step step = next_transition(net, y, code);
    if (step.kind == StepKind::converged) {
      traj.terminal = Terminal::converged_to_focal_point;
      return traj;
    }
    if (step.kind == StepKind::degenerate) {
      traj.terminal = Terminal::degenerate_event;
      traj.degenerate_point = y;
      traj.degenerate_variables = std::move(step.tied);
      return traj;
    }
    clock.add(step.duration);
    const OrthantCode next = code.flipped(step.variable);
    traj.events.push_back({clock.value(), step.exit_point, step.variable, code, next});
    y = std::move(step.exit_point);
    code = next;
  }
  traj.terminal = Terminal::reached_max_transitions;
  return traj;
}

std::string trajectory_csv(const Trajectory& trajectory) {
  const auto n = trajectory.start.size();
  std::string out = "k,t";
  for (Eigen::Index i = 0; i < n; ++i) out += fmt::format(",y{}", i + 1);
  out += ",j,orthant\n";
  std::size_t k = 0;
  for (const auto& e : trajectory.events) {
    out += fmt::format("{},{},{},{},{}\n", ++k, format_number(e.time), format_vector(e.point), e.variable + 1,
                       e.to.str());
  }
  return out;
}

}  // namespace glassnet
