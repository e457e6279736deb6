#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glassnet/network.hpp"

namespace glassnet {

/// Two candidate crossing times closer than this (relative to max(1, t)) are a tie.
inline constexpr double kTieTolerance = 1e-12;

/// A crossing of the wall y_variable = 0.
struct TransitionEvent {
  double time = 0.0;  // since trajectory start
  Vector point;       // point[variable] == 0 exactly
  int variable = 0;   // 0-based switching variable
  OrthantCode from;
  OrthantCode to;
};

enum class StepKind { crossing, converged, degenerate };

/// Outcome of following the closed-form solution inside one orthant.
struct Step {
  StepKind kind = StepKind::converged;
  double duration = 0.0;      // crossing only
  Vector exit_point;          // crossing only
  int variable = -1;          // crossing only
  std::vector<int> tied;      // degenerate only: the variables reaching zero together
};

/// Follows y(t) = f + (y - f) e^{-t} in orthant `code` to its first wall.
///
/// `y` must lie in the closed orthant: components may be zero only where the
/// flow enters the orthant (the sign of f matches the orthant there).
Step next_transition(const GlassNetwork& net, const Vector& y, const OrthantCode& code);

enum class Terminal { reached_max_transitions, converged_to_focal_point, degenerate_event };

std::string to_string(Terminal terminal);

struct Trajectory {
  Vector start;
  OrthantCode start_orthant;
  std::vector<TransitionEvent> events;
  Terminal terminal = Terminal::reached_max_transitions;
  /// Set for degenerate_event: the state at which the tie occurred.
  Vector degenerate_point;
  std::vector<int> degenerate_variables;
};

/// Exact event-driven simulation.
///
/// Interior starts need no `entering`. A start on one or more walls needs the
/// orthant being entered; its signs must agree with the nonzero components
/// and the flow must point into it across every zero component.
Trajectory simulate(const GlassNetwork& net, const Vector& start, std::size_t max_transitions,
                    std::optional<OrthantCode> entering = std::nullopt);

/// Header `k,t,y1..yn,j,orthant`; one row per event, j 1-based, orthant entered.
std::string trajectory_csv(const Trajectory& trajectory);

/// Neumaier compensated summation.
class CompensatedSum {
public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace glassnet
