#include <doctest.h>

#include "glassnet/batch.hpp"
#include "oracles.hpp"

using namespace glassnet;

TEST_SUITE("batch") {

TEST_CASE("sampling is seeded") {
  const Vector signs = oracle::vec({1, -1, 1});
  const auto a = sample_octant(signs, 100, 42);
  const auto b = sample_octant(signs, 100, 42);
  const auto c = sample_octant(signs, 100, 43);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (const auto& y : a) {
    for (int i = 0; i < 3; ++i) CHECK(y[i] * signs[i] > 0);
    CHECK(y.lpNorm<1>() > 0.05);
    CHECK(y.lpNorm<1>() < 2.0);
  }
  const auto tri = slice_triangle(signs);
  for (const auto& p : sample_polygon(tri, 200, 1)) CHECK(tri.contains(p, 0.0));
}

TEST_CASE("serial and parallel kernels agree exactly") {
  const auto net = paper_network();
  const auto cycle = CycleSpec::parse(oracle::kCycle1);
  const auto cone = returning_cone(net, cycle);
  const auto points = sample_octant(cone.signs, 3000, 9);

  const auto rs = first_returns(net, cycle, points, 16, Execution::serial);
  const auto rp = first_returns(net, cycle, points, 16, Execution::parallel);
  REQUIRE(rs.size() == rp.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    CHECK(rs[i].returned == rp[i].returned);
    CHECK(rs[i].path == rp[i].path);
    CHECK(rs[i].point == rp[i].point);
    CHECK(rs[i].time == rp[i].time);
  }
  CHECK(classify_points(cone, points, Execution::serial) == classify_points(cone, points, Execution::parallel));
  const auto m = cycle_map(net, cycle).reduced;
  CHECK(apply_map(m, points, Execution::serial) == apply_map(m, points, Execution::parallel));
}

TEST_CASE("wall embedding") {
  const auto cycle = CycleSpec::parse(oracle::kCycle0);
  const Vector w = oracle::vec({0.2, -0.1, 0.3});
  const Vector full = embed_on_wall(cycle, w);
  CHECK(full == oracle::vec({0, 0.2, -0.1, 0.3}));
  CHECK(restrict_to_wall(cycle, full) == w);
}

TEST_CASE("first return stops when the loop leaves the cycle") {
  const auto net = paper_network();
  const auto cycle = CycleSpec::parse(oracle::kCycle0);
  const auto cone = returning_cone(net, cycle);
  std::size_t other = 0;
  for (const auto& y : sample_octant(cone.signs, 500, 2)) {
    const auto r = first_return(net, cycle, y, 64);
    if (!r.returned) continue;
    CHECK(r.path.front() == cycle.entered());
    CHECK(r.point[cycle.wall_variable()] == 0.0);
    if (r.path != cycle.codes()) ++other;
  }
  CHECK(other > 0);
}

}  // TEST_SUITE
