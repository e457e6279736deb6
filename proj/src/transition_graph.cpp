#include "glassnet/transition_graph.hpp"

#include <algorithm>
#include <atomic>

#include <fmt/format.h>

namespace glassnet {

CubeGraph::CubeGraph(int dimension, std::vector<std::vector<int>> switching_variables)
    : dimension_(dimension), out_(std::move(switching_variables)) {
  if (out_.size() != (std::size_t{1} << dimension)) throw PreconditionError("cube graph needs 2^n nodes");
}

std::vector<OrthantCode> CubeGraph::successors(const OrthantCode& code) const {
  std::vector<OrthantCode> next;
  for (int j : exits(code)) next.push_back(code.flipped(j));
  return next;
}

bool CubeGraph::has_edge(const OrthantCode& from, const OrthantCode& to) const {
  const std::uint32_t diff = from.index() ^ to.index();
  if (diff == 0 || (diff & (diff - 1)) != 0) return false;
  const int j = differing_variable(from, to);
  const auto& e = exits(from);
  return std::find(e.begin(), e.end(), j) != e.end();
}

std::size_t CubeGraph::edge_count() const {
  std::size_t count = 0;
  for (const auto& e : out_) count += e.size();
  return count;
}

std::vector<OrthantCode> CubeGraph::self_fixed() const {
  std::vector<OrthantCode> fixed;
  for (std::uint32_t idx = 0; idx < out_.size(); ++idx)
    if (out_[idx].empty()) fixed.emplace_back(dimension_, idx);
  return fixed;
}

CubeGraph build_transition_graph(const GlassNetwork& net) {
  const int n = net.dimension();
  std::vector<std::vector<int>> out(net.orthant_count());
  for (std::uint32_t idx = 0; idx < out.size(); ++idx) {
    const OrthantCode code(n, idx);
    const Vector& f = net.focal_point(code);
    for (int j = 0; j < n; ++j)
      if (f[j] * code.sign(j) < 0.0) out[idx].push_back(j);
  }
  return CubeGraph(n, std::move(out));
}

std::string to_dot(const CubeGraph& graph) {
  std::string out = "digraph cube {\n";
  for (std::uint32_t idx = 0; idx < graph.node_count(); ++idx) {
    const OrthantCode code(graph.dimension(), idx);
    if (graph.exits(code).empty())
      out += fmt::format("  \"{}\" [shape=doublecircle, fixed=true];\n", code.str());
    else
      out += fmt::format("  \"{}\";\n", code.str());
  }
  for (std::uint32_t idx = 0; idx < graph.node_count(); ++idx) {
    const OrthantCode code(graph.dimension(), idx);
    for (int j : graph.exits(code))
      out += fmt::format("  \"{}\" -> \"{}\" [label=\"y{}\"];\n", code.str(), code.flipped(j).str(), j + 1);
  }
  out += "}\n";
  return out;
}

CycleSpec::CycleSpec(std::vector<OrthantCode> codes) : codes_(std::move(codes)) {
  if (codes_.size() < 2) throw PreconditionError("a cycle needs at least two orthants");
  const int n = codes_.front().dimension();
  for (std::size_t k = 0; k < codes_.size(); ++k) {
    const auto& a = codes_[k];
    const auto& b = codes_[(k + 1) % codes_.size()];
    if (a.dimension() != n || b.dimension() != n) throw PreconditionError("cycle codes have mixed dimensions");
    switches_.push_back(differing_variable(a, b));
  }
  auto sorted = codes_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("cycle repeats an orthant");
}

CycleSpec CycleSpec::parse(std::string_view text) {
  std::vector<OrthantCode> codes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view word = text.substr(pos, end - pos);
    while (!word.empty() && word.front() == ' ') word.remove_prefix(1);
    while (!word.empty() && word.back() == ' ') word.remove_suffix(1);
    codes.push_back(OrthantCode::parse(word));
    pos = end + 1;
  }
  return CycleSpec(std::move(codes));
}

CycleSpec CycleSpec::rotated_to(const OrthantCode& code) const {
  auto it = std::find(codes_.begin(), codes_.end(), code);
  if (it == codes_.end()) throw PreconditionError(fmt::format("orthant {} is not on the cycle", code.str()));
  auto codes = codes_;
  std::rotate(codes.begin(), codes.begin() + (it - codes_.begin()), codes.end());
  return CycleSpec(std::move(codes));
}

std::string CycleSpec::str() const {
  std::string out;
  for (const auto& c : codes_) {
    if (!out.empty()) out += ',';
    out += c.str();
  }
  return out;
}

std::string CycleSpec::wall_label() const {
  std::string label;
  for (int i = 0; i < dimension(); ++i) label += i == wall_variable() ? '0' : (entered().bit(i) ? '+' : '-');
  return label;
}

bool cycle_in_graph(const CubeGraph& graph, const CycleSpec& cycle) {
  const auto& codes = cycle.codes();
  for (std::size_t k = 0; k < codes.size(); ++k)
    if (!graph.has_edge(codes[k], codes[(k + 1) % codes.size()])) return false;
  return true;
}

namespace {

// Cycles whose smallest node is `root`: depth-first search over nodes above root.
void cycles_from_root(const CubeGraph& graph, std::uint32_t root, std::size_t max_length,
                      std::atomic<std::size_t>& total, std::size_t cap, std::vector<CycleSpec>& out) {
  const int n = graph.dimension();
  std::vector<OrthantCode> path{OrthantCode(n, root)};
  std::vector<bool> on_path(graph.node_count(), false);
  on_path[root] = true;
  // explicit stack of (node, next exit position)
  std::vector<std::size_t> cursor{0};
  while (!path.empty()) {
    const OrthantCode node = path.back();
    const auto& exits = graph.exits(node);
    if (cursor.back() == exits.size()) {
      on_path[node.index()] = false;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    const OrthantCode next = node.flipped(exits[cursor.back()++]);
    if (next.index() == root) {
      if (path.size() >= 2) {
        if (total.fetch_add(1) + 1 > cap)
          throw CycleLimitError(fmt::format("cycle count exceeds cap of {}", cap));
        out.emplace_back(path);
      }
      continue;
    }
    if (next.index() < root || on_path[next.index()] || path.size() >= max_length) continue;
    on_path[next.index()] = true;
    path.push_back(next);
    cursor.push_back(0);
  }
}

}  // namespace

std::vector<CycleSpec> enumerate_cycles(const CubeGraph& graph, std::size_t max_length, std::size_t cap,
                                        Execution execution) {
  if (max_length < 2) throw PreconditionError("max_length must be at least 2");
  const auto nodes = static_cast<std::int64_t>(graph.node_count());
  std::vector<std::vector<CycleSpec>> per_root(static_cast<std::size_t>(nodes));
  std::atomic<std::size_t> total{0};

  if (execution == Execution::serial) {
    for (std::int64_t r = 0; r < nodes; ++r)
      cycles_from_root(graph, static_cast<std::uint32_t>(r), max_length, total, cap, per_root[r]);
  } else {
    bool overflow = false;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < nodes; ++r) {
      try {
        cycles_from_root(graph, static_cast<std::uint32_t>(r), max_length, total, cap, per_root[r]);
      } catch (const CycleLimitError&) {
#pragma omp atomic write
        overflow = true;
      }
    }
    if (overflow) throw CycleLimitError(fmt::format("cycle count exceeds cap of {}", cap));
  }

  std::vector<CycleSpec> cycles;
  for (auto& bucket : per_root)
    for (auto& c : bucket) cycles.push_back(std::move(c));
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace glassnet
