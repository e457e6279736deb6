// Serial reference vs OpenMP kernels on the four-variable network.
#include <benchmark/benchmark.h>

#include "glassnet/batch.hpp"
#include "glassnet/transition_graph.hpp"

namespace {

using namespace glassnet;

const CycleSpec& cycle1() {
  static const CycleSpec c = CycleSpec::parse("0101,0111,1111,1011,1010,1000,1100,1101");
  return c;
}

const GlassNetwork& net() {
  static const GlassNetwork n = paper_network();
  return n;
}

void BM_FirstReturns(benchmark::State& state, Execution execution) {
  const Vector signs = Vector::Map(std::array<double, 3>{1.0, -1.0, 1.0}.data(), 3);
  const auto points = sample_octant(signs, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(first_returns(net(), cycle1(), points, 64, execution));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassifyPoints(benchmark::State& state, Execution execution) {
  const ReturningCone cone = returning_cone(net(), cycle1());
  const auto points = sample_octant(cone.signs, static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(classify_points(cone, points, execution));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EnumerateCycles(benchmark::State& state, Execution execution) {
  const CubeGraph graph = build_transition_graph(net());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles(graph, 16, kDefaultCycleCap, execution));
}

}  // namespace

BENCHMARK_CAPTURE(BM_FirstReturns, serial, Execution::serial)->Arg(1 << 12)->Arg(1 << 15);
BENCHMARK_CAPTURE(BM_FirstReturns, parallel, Execution::parallel)->Arg(1 << 12)->Arg(1 << 15);
BENCHMARK_CAPTURE(BM_ClassifyPoints, serial, Execution::serial)->Arg(1 << 15);
BENCHMARK_CAPTURE(BM_ClassifyPoints, parallel, Execution::parallel)->Arg(1 << 15);
BENCHMARK_CAPTURE(BM_EnumerateCycles, serial, Execution::serial);
BENCHMARK_CAPTURE(BM_EnumerateCycles, parallel, Execution::parallel);

BENCHMARK_MAIN();
