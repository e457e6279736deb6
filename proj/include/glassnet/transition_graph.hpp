#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glassnet/execution.hpp"
#include "glassnet/network.hpp"

namespace glassnet {

/// Directed state-transition diagram on the n-cube.
class CubeGraph {
public:
  CubeGraph(int dimension, std::vector<std::vector<int>> switching_variables);

  int dimension() const { return dimension_; }
  std::size_t node_count() const { return out_.size(); }

  /// Variables that can switch when leaving `code`, ascending.
  const std::vector<int>& exits(const OrthantCode& code) const { return out_[code.index()]; }
  std::vector<OrthantCode> successors(const OrthantCode& code) const;
  bool has_edge(const OrthantCode& from, const OrthantCode& to) const;
  std::size_t edge_count() const;

  /// Codes whose focal point lies in their own orthant (no outgoing edges).
  std::vector<OrthantCode> self_fixed() const;

private:
  int dimension_;
  std::vector<std::vector<int>> out_;
};

CubeGraph build_transition_graph(const GlassNetwork& net);

std::string to_dot(const CubeGraph& graph);

/// A closed walk on the cube. The start wall lies between the last and the
/// first code; the return map is taken on that wall, entering codes[0].
class CycleSpec {
public:
  /// Validates adjacency and closure; throws PreconditionError.
  explicit CycleSpec(std::vector<OrthantCode> codes);

  /// Parses "0101,0111,...".
  static CycleSpec parse(std::string_view text);

  const std::vector<OrthantCode>& codes() const { return codes_; }
  /// switches()[k] is the variable flipped leaving codes()[k].
  const std::vector<int>& switches() const { return switches_; }
  std::size_t length() const { return codes_.size(); }
  int dimension() const { return codes_.front().dimension(); }

  int wall_variable() const { return switches_.back(); }
  const OrthantCode& entered() const { return codes_.front(); }

  /// Same cycle starting at `code`; throws if `code` is not on the cycle.
  CycleSpec rotated_to(const OrthantCode& code) const;

  /// Text "0101,0111,...".
  std::string str() const;
  /// Wall label such as "0+-+": 0 at the wall variable, the entered signs elsewhere.
  std::string wall_label() const;

  friend bool operator==(const CycleSpec& a, const CycleSpec& b) { return a.codes_ == b.codes_; }
  friend bool operator<(const CycleSpec& a, const CycleSpec& b) { return a.codes_ < b.codes_; }

private:
  std::vector<OrthantCode> codes_;
  std::vector<int> switches_;
};

/// True when every step of the cycle is an edge of the graph.
bool cycle_in_graph(const CubeGraph& graph, const CycleSpec& cycle);

class CycleLimitError : public Error {
public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// All elementary directed cycles with 2 <= length <= max_length.
///
/// Each cycle starts at its smallest code. Output is sorted by code sequence,
/// so it does not depend on the execution policy.
std::vector<CycleSpec> enumerate_cycles(const CubeGraph& graph, std::size_t max_length,
                                        std::size_t cap = kDefaultCycleCap,
                                        Execution execution = Execution::parallel);

}  // namespace glassnet
