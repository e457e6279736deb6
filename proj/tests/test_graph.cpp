#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace glassnet;

TEST_SUITE("transition_graph") {

TEST_CASE("edges of the bundled network") {
  const auto g = build_transition_graph(paper_network());
  const auto from0101 = g.successors(OrthantCode::parse("0101"));
  REQUIRE(from0101.size() == 1);
  CHECK(from0101[0].str() == "0111");
  const auto from1011 = g.successors(OrthantCode::parse("1011"));
  REQUIRE(from1011.size() == 2);
  CHECK(from1011[0].str() == "1001");
  CHECK(from1011[1].str() == "1010");
  CHECK(g.has_edge(OrthantCode::parse("1011"), OrthantCode::parse("1010")));
  CHECK_FALSE(g.has_edge(OrthantCode::parse("1010"), OrthantCode::parse("1011")));
  CHECK(g.self_fixed().empty());
}

TEST_CASE("out-degree counts opposing focal signs") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 5;
    const GlassNetwork net(n, oracle::random_table(n, rng, false));
    const auto g = build_transition_graph(net);
    std::size_t edges = 0;
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
      const OrthantCode code(n, i);
      const Vector& f = net.focal_point(code);
      std::size_t opposing = 0;
      for (int j = 0; j < n; ++j) opposing += (f[j] > 0) != code.bit(j);
      CHECK(g.successors(code).size() == opposing);
      edges += opposing;
    }
    CHECK(g.edge_count() == edges);
  }
}

TEST_CASE("all focal points inside their own orthant") {
  std::vector<Vector> table;
  for (std::uint32_t i = 0; i < 4; ++i) {
    const OrthantCode c(2, i);
    table.push_back(oracle::vec({double(c.sign(0)), double(c.sign(1))}));
  }
  NetworkOptions loose;
  loose.require_condition2 = false;
  const auto g = build_transition_graph(GlassNetwork(2, table, loose));
  CHECK(g.edge_count() == 0);
  CHECK(g.self_fixed().size() == 4);
  CHECK(enumerate_cycles(g, 8).empty());
  CHECK(to_dot(g).find("\"00\" [shape=doublecircle") != std::string::npos);
}

TEST_CASE("dot output") {
  const std::string dot = to_dot(build_transition_graph(paper_network()));
  CHECK(dot.rfind("digraph cube {", 0) == 0);
  CHECK(dot.find("\"0101\" -> \"0111\" [label=\"y3\"];") != std::string::npos);
  // every edge line parses back to an edge of the graph
  const auto g = build_transition_graph(paper_network());
  std::istringstream in(dot);
  std::string line;
  std::size_t edges = 0;
  while (std::getline(in, line)) {
    const auto arrow = line.find(" -> ");
    if (arrow == std::string::npos) continue;
    const auto a = OrthantCode::parse(line.substr(line.find('"') + 1, 4));
    const auto b = OrthantCode::parse(line.substr(arrow + 5, 4));
    const int label = std::stoi(line.substr(line.find("label=\"y") + 8));
    CHECK(g.has_edge(a, b));
    CHECK(differing_variable(a, b) == label - 1);
    ++edges;
  }
  CHECK(edges == g.edge_count());
}

TEST_CASE("cycle specs") {
  const auto c = CycleSpec::parse(oracle::kCycle1);
  CHECK(c.length() == 8);
  CHECK(c.wall_variable() == 0);
  CHECK(c.entered().str() == "0101");
  CHECK(c.wall_label() == "0+-+");
  CHECK(c.str() == oracle::kCycle1);
  CHECK(c.switches() == std::vector<int>{2, 0, 1, 3, 2, 1, 3, 0});
  CHECK(c.rotated_to(OrthantCode::parse("1011")).str() == "1011,1010,1000,1100,1101,0101,0111,1111");
  CHECK_THROWS_AS(CycleSpec::parse("0101,0111,1000"), PreconditionError);
  CHECK_THROWS_AS(CycleSpec::parse("00,01,00,01"), PreconditionError);
  CHECK(cycle_in_graph(build_transition_graph(paper_network()), c));
  CHECK_FALSE(cycle_in_graph(build_transition_graph(paper_network()), CycleSpec::parse("0101,0100")));
}

TEST_CASE("enumeration finds both cycles and matches brute force") {
  const auto g = build_transition_graph(paper_network());
  const auto cycles = enumerate_cycles(g, 8);
  const auto brute = oracle::brute_cycles(g, 8);
  CHECK(cycles.size() == brute.size());
  std::set<std::vector<std::uint32_t>> got;
  for (const auto& c : cycles) {
    std::vector<std::uint32_t> idx;
    for (const auto& code : c.codes()) idx.push_back(code.index());
    got.insert(idx);
    CHECK(idx.front() == *std::min_element(idx.begin(), idx.end()));
  }
  CHECK(got == brute);
  CHECK(std::is_sorted(cycles.begin(), cycles.end()));
  for (const char* text : {oracle::kCycle0, oracle::kCycle1}) {
    const auto canonical = CycleSpec::parse(text).rotated_to(OrthantCode::parse("0101"));
    const auto smallest = *std::min_element(canonical.codes().begin(), canonical.codes().end());
    CHECK(std::find(cycles.begin(), cycles.end(), canonical.rotated_to(smallest)) != cycles.end());
  }
}

TEST_CASE("enumeration on random graphs: brute force and execution policies agree") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const auto g = build_transition_graph(GlassNetwork(n, oracle::random_table(n, rng, true)));
    const std::size_t len = std::size_t{1} << n;
    const auto serial = enumerate_cycles(g, len, kDefaultCycleCap, Execution::serial);
    const auto parallel = enumerate_cycles(g, len, kDefaultCycleCap, Execution::parallel);
    CHECK(serial == parallel);
    CHECK(serial.size() == oracle::brute_cycles(g, len).size());
  }
}

TEST_CASE("cycle cap") {
  const auto g = build_transition_graph(paper_network());
  CHECK_THROWS_AS(enumerate_cycles(g, 8, 3), CycleLimitError);
}

TEST_CASE("edges agree with simulation") {
  std::mt19937_64 rng(33);
  int nets = 0;
  while (nets < 50) {
    const int n = 2 + nets % 3;
    const GlassNetwork net(n, oracle::random_table(n, rng, false));
    const auto g = build_transition_graph(net);
    ++nets;
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
      const OrthantCode code(n, i);
      const Vector& f = net.focal_point(code);
      for (int j : g.exits(code)) {
        // Start near the wall of j and far from the other exit walls.
        Vector y = oracle::random_point_in(code, rng, 0.5, 1.0);
        y[j] = code.sign(j) * 1e-3;
        for (int other : g.exits(code))
          if (other != j) y[other] = code.sign(other) * (std::abs(f[other]) * 0.9 + 1e-6);
        const auto traj = simulate(net, y, 1);
        REQUIRE(traj.events.size() == 1);
        CHECK(traj.events[0].to == code.flipped(j));
        CHECK(g.has_edge(code, traj.events[0].to));
      }
    }
  }
}

TEST_CASE("simulated orthant sequences are graph paths") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3;
    const GlassNetwork net(n, oracle::random_table(n, rng, trial % 2 == 1));
    const auto g = build_transition_graph(net);
    const auto traj = simulate(net, oracle::random_point_in(OrthantCode(n, 0), rng), 100);
    for (const auto& e : traj.events) CHECK(g.has_edge(e.from, e.to));
  }
}

}  // TEST_SUITE
