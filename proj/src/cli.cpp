#include "glassnet/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "glassnet/batch.hpp"
#include "glassnet/chaos.hpp"
#include "glassnet/orbit.hpp"

namespace glassnet {

namespace {

namespace fs = std::filesystem;

constexpr const char* kPaperCycle0 = "0101,0111,1111,1011,1001,1000,1100,1101";
constexpr const char* kPaperCycle1 = "0101,0111,1111,1011,1010,1000,1100,1101";

struct RunConfig {
  std::string network;
  std::vector<std::string> cycles;
  std::string start;
  std::string entering;
  std::size_t transitions = 1000;
  std::size_t max_len = 8;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::string out_dir;
  std::string format;
};

class UsageError : public Error {
public:
  using Error::Error;
};

GlassNetwork load_network(const std::string& path, NetworkOptions options = {}) {
  if (path == "@paper") return parse_network(paper_network_text(), options);
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot read network file '{}'", path));
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str(), options);
}

Vector parse_point(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(fmt::format("invalid --start component '{}'", item));
    }
  }
  Vector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return v;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(fmt::format("cannot write '{}'", path.string()));
  f << content;
}

void emit(const RunConfig& cfg, const std::string& file_name, const std::string& content, std::ostream& out) {
  if (cfg.out_dir.empty()) {
    out << content;
    return;
  }
  fs::create_directories(cfg.out_dir);
  write_file(fs::path(cfg.out_dir) / file_name, content);
}

CycleSpec single_cycle(const RunConfig& cfg) {
  if (cfg.cycles.size() != 1) throw UsageError("exactly one --cycle is required");
  return CycleSpec::parse(cfg.cycles.front());
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  NetworkOptions options;
  options.require_condition2 = false;
  const GlassNetwork net = load_network(cfg.network, options);
  const ValidationReport report = validate_conditions(net);
  out << describe(report);
  return report.ok() ? 0 : 1;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const GlassNetwork net = load_network(cfg.network);
  if (cfg.start.empty()) throw UsageError("--start is required");
  const Vector start = parse_point(cfg.start);
  if (start.size() != net.dimension())
    throw UsageError(fmt::format("--start has {} components, network has {}", start.size(), net.dimension()));
  std::optional<OrthantCode> entering;
  if (!cfg.entering.empty()) entering = OrthantCode::parse(cfg.entering);
  const Trajectory traj = simulate(net, start, cfg.transitions, entering);
  emit(cfg, "trajectory.csv", trajectory_csv(traj), out);
  if (traj.terminal == Terminal::degenerate_event) {
    std::string vars;
    for (int v : traj.degenerate_variables) vars += fmt::format(" y{}", v + 1);
    throw Error(fmt::format("degenerate event: variables{} reach zero together at ({})", vars,
                            format_vector(traj.degenerate_point)));
  }
  return 0;
}

std::string graph_text(const CubeGraph& graph) {
  std::string out;
  for (std::uint32_t idx = 0; idx < graph.node_count(); ++idx) {
    const OrthantCode code(graph.dimension(), idx);
    out += code.str() + " ->";
    for (const auto& s : graph.successors(code)) out += " " + s.str();
    if (graph.exits(code).empty()) out += " (fixed)";
    out += "\n";
  }
  return out;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out) {
  const CubeGraph graph = build_transition_graph(load_network(cfg.network));
  const std::string format = cfg.format.empty() ? "dot" : cfg.format;
  if (format == "dot")
    emit(cfg, "graph.dot", to_dot(graph), out);
  else if (format == "text")
    emit(cfg, "graph.txt", graph_text(graph), out);
  else
    throw UsageError(fmt::format("graph does not support --format {}", format));
  return 0;
}

std::string cycle_list(const std::vector<CycleSpec>& cycles) {
  std::string out;
  for (const auto& c : cycles) out += c.str() + "\n";
  return out;
}

int cmd_cycles(const RunConfig& cfg, std::ostream& out) {
  const CubeGraph graph = build_transition_graph(load_network(cfg.network));
  emit(cfg, "cycles.txt", cycle_list(enumerate_cycles(graph, cfg.max_len)), out);
  return 0;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const GlassNetwork net = load_network(cfg.network);
  emit(cfg, "orbit.txt", orbit_report(analyze_orbit(net, single_cycle(cfg))), out);
  return 0;
}

// Sampled agreement between cone membership and integrator itineraries.
std::string cone_sampling(const GlassNetwork& net, const ReturningCone& cone, std::size_t samples,
                          std::uint64_t seed) {
  const auto points = sample_octant(cone.signs, samples, seed);
  const auto verdicts = classify_points(cone, points);
  const auto returns = first_returns(net, cone.cycle, points, cone.cycle.length());
  std::size_t inside = 0, boundary = 0, disagreements = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (verdicts[i] == Membership::boundary) {
      ++boundary;
      continue;
    }
    const bool follows = returns[i].returned && returns[i].path == cone.cycle.codes();
    if (verdicts[i] == Membership::interior) ++inside;
    if (follows != (verdicts[i] == Membership::interior)) ++disagreements;
  }
  return fmt::format("sampling (seed {}): {} points, {} interior, {} boundary, {} disagreements with simulation\n",
                     seed, points.size(), inside, boundary, disagreements);
}

int cmd_cone(const RunConfig& cfg, std::ostream& out) {
  const GlassNetwork net = load_network(cfg.network);
  const ReturningCone cone = returning_cone(net, single_cycle(cfg));
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (format == "text") {
    emit(cfg, "cone.txt", cone_report(cone) + cone_sampling(net, cone, cfg.samples, cfg.seed), out);
  } else if (format == "csv") {
    emit(cfg, "cone.csv", polygon_csv({{"cone", cone_to_polygon(cone)}}), out);
  } else {
    throw UsageError(fmt::format("cone does not support --format {}", format));
  }
  return 0;
}

// Integrates sampled points of M1(C1) & C0 and counts loops that repeat cycle 0.
std::string forbidden_word_sampling(const GlassNetwork& net, const HorseshoeReport& report, std::size_t samples,
                                    std::uint64_t seed) {
  const auto& cycle0 = report.cycles[0];
  const ConvexPolygon* region = nullptr;
  for (const auto& [name, poly] : report.polygons)
    if (name == "M1(C1)&C0") region = &poly;
  if (!region || !region->has_interior()) return "forbidden-word sampling: region M1(C1)&C0 is empty\n";
  const Vector signs = cycle_map(net, cycle0).octant_signs();
  std::size_t repeats = 0, checked = 0;
  for (const auto& p : sample_polygon(*region, samples, seed)) {
    const Vector start = embed_on_wall(cycle0, lift_from_slice(p, signs));
    const auto loops = split_loops(simulate(net, start, 2 * cycle0.length() + 16, cycle0.entered()), cycle0);
    if (loops.size() < 2) continue;
    ++checked;
    if (loops[0] == cycle0.codes() && loops[1] == cycle0.codes()) ++repeats;
  }
  return fmt::format("forbidden-word sampling (seed {}): {} points of M1(C1)&C0 integrated, {} followed cycle 0 twice\n",
                     seed, checked, repeats);
}

int cmd_horseshoe(const RunConfig& cfg, std::ostream& out) {
  if (cfg.cycles.size() != 2) throw UsageError("horseshoe needs two --cycle options");
  const GlassNetwork net = load_network(cfg.network);
  HorseshoeOptions options;
  options.census_transitions = cfg.transitions;
  const HorseshoeReport report =
      horseshoe_report(net, CycleSpec::parse(cfg.cycles[0]), CycleSpec::parse(cfg.cycles[1]), options);
  const std::string text = horseshoe_text(report) + forbidden_word_sampling(net, report, cfg.samples, cfg.seed);
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (!cfg.out_dir.empty()) {
    emit(cfg, "horseshoe.txt", text, out);
    emit(cfg, "horseshoe_polygons.csv", polygon_csv(report.polygons), out);
  } else if (format == "csv") {
    out << polygon_csv(report.polygons);
  } else if (format == "text") {
    out << text;
  } else {
    throw UsageError(fmt::format("horseshoe does not support --format {}", format));
  }
  return 0;
}

std::string points_csv(const std::vector<std::pair<std::string, Point2>>& points) {
  std::string out = "name,x,y\n";
  for (const auto& [name, p] : points) out += fmt::format("{},{},{}\n", name, format_number(p.x), format_number(p.y));
  return out;
}

int cmd_repro(const RunConfig& cfg, std::ostream& out) {
  if (cfg.out_dir.empty()) throw UsageError("repro-paper needs --out DIR");
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);

  const GlassNetwork net = paper_network();
  write_file(dir / "paper.gn", serialize_network(net));
  const CubeGraph graph = build_transition_graph(net);
  write_file(dir / "graph.dot", to_dot(graph));
  write_file(dir / "cycles.txt", cycle_list(enumerate_cycles(graph, 8)));

  const CycleSpec c0 = CycleSpec::parse(kPaperCycle0);
  const CycleSpec c1 = CycleSpec::parse(kPaperCycle1);
  write_file(dir / "cycle0_report.txt", orbit_report(analyze_orbit(net, c0)));
  write_file(dir / "cycle1_report.txt", orbit_report(analyze_orbit(net, c1)));
  const ReturningCone cone0 = returning_cone(net, c0);
  const ReturningCone cone1 = returning_cone(net, c1);
  write_file(dir / "cone0.txt", cone_report(cone0) + cone_sampling(net, cone0, cfg.samples, cfg.seed));
  write_file(dir / "cone1.txt", cone_report(cone1) + cone_sampling(net, cone1, cfg.samples, cfg.seed));

  HorseshoeOptions options;
  options.census_transitions = 1000;
  const HorseshoeReport report = horseshoe_report(net, c0, c1, options);
  write_file(dir / "horseshoe.txt", horseshoe_text(report) + forbidden_word_sampling(net, report, cfg.samples, cfg.seed));
  write_file(dir / "horseshoe_polygons.csv", polygon_csv(report.polygons));

  std::vector<std::pair<std::string, ConvexPolygon>> fig2b = {{"wall", slice_triangle(cone0.signs)}};
  for (const auto& [name, poly] : report.polygons)
    if (name == "C0" || name == "C1" || name == "M0(C0)" || name == "M1(C1)") fig2b.emplace_back(name, poly);
  write_file(dir / "fig2b_polygons.csv", polygon_csv(fig2b));
  write_file(dir / "fig2b_points.csv", points_csv(report.marked_points));

  Vector start(4);
  start << 0.1, -0.2, 0.3, -0.4;
  write_file(dir / "fig2a_trajectory.csv", trajectory_csv(simulate(net, start, 1000)));

  out << fmt::format("wrote {} files to {}\n", repro_paper_files().size(), dir.string());
  for (const auto& w : report.forbidden_words) out << "forbidden word: " << w << "\n";
  out << fmt::format("repulsion threshold k*: {:.15f}\n", report.repulsion.threshold);
  return 0;
}

}  // namespace

std::vector<std::string> repro_paper_files() {
  return {"paper.gn",       "graph.dot",    "cycles.txt",          "cycle0_report.txt", "cycle1_report.txt",
          "cone0.txt",      "cone1.txt",    "horseshoe.txt",       "horseshoe_polygons.csv", "fig2b_polygons.csv",
          "fig2b_points.csv", "fig2a_trajectory.csv"};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of Glass switching networks", "glassnet"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_network = [&](CLI::App* sub) { sub->add_option("network", cfg.network, "network file, or @paper")->required(); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_dir, "write files into DIR instead of stdout"); };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(std::move(allowed)));
  };
  auto add_cycle = [&](CLI::App* sub) {
    sub->add_option("--cycle", cfg.cycles, "orthant codes, comma separated; start wall between last and first");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "seed for sampling checks")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "points per sampling check")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "check Conditions 1 and 2");
  add_network(validate);

  auto* sim = app.add_subcommand("simulate", "exact event-driven trajectory as CSV");
  add_network(sim);
  sim->add_option("--start", cfg.start, "start point v1,...,vn");
  sim->add_option("--entering", cfg.entering, "orthant entered when the start lies on a wall");
  sim->add_option("--transitions", cfg.transitions, "maximum number of wall crossings")->capture_default_str();
  add_out(sim);
  add_format(sim, {"csv"});

  auto* graph = app.add_subcommand("graph", "state-transition diagram on the n-cube");
  add_network(graph);
  add_out(graph);
  add_format(graph, {"dot", "text"});

  auto* cycles = app.add_subcommand("cycles", "elementary cycles of the transition diagram");
  add_network(cycles);
  cycles->add_option("--max-len", cfg.max_len, "longest cycle to list")->capture_default_str();
  add_out(cycles);
  add_format(cycles, {"text"});

  auto* analyze = app.add_subcommand("analyze", "cycle map, eigen-data, fixed point, stability, period");
  add_network(analyze);
  add_cycle(analyze);
  add_out(analyze);
  add_format(analyze, {"text"});

  auto* cone = app.add_subcommand("cone", "returning cone of a cycle");
  add_network(cone);
  add_cycle(cone);
  add_seed(cone);
  add_out(cone);
  add_format(cone, {"text", "csv"});

  auto* horseshoe = app.add_subcommand("horseshoe", "two-cycle horseshoe analysis");
  add_network(horseshoe);
  add_cycle(horseshoe);
  add_seed(horseshoe);
  horseshoe->add_option("--transitions", cfg.transitions, "length of the itinerary census")->capture_default_str();
  add_out(horseshoe);
  add_format(horseshoe, {"text", "csv"});

  auto* repro = app.add_subcommand("repro-paper", "write every data file of the bundled four-variable analysis");
  add_seed(repro);
  add_out(repro);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "glassnet: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) return cmd_validate(cfg, out);
    if (*sim) return cmd_simulate(cfg, out);
    if (*graph) return cmd_graph(cfg, out);
    if (*cycles) return cmd_cycles(cfg, out);
    if (*analyze) return cmd_analyze(cfg, out);
    if (*cone) return cmd_cone(cfg, out);
    if (*horseshoe) return cmd_horseshoe(cfg, out);
    if (*repro) return cmd_repro(cfg, out);
  } catch (const UsageError& e) {
    err << "glassnet: usage: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "glassnet: parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "glassnet: error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}

}  // namespace glassnet
