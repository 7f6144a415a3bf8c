#include <benchmark/benchmark.h>

#include "wsc/families.hpp"
#include "wsc/partition.hpp"

namespace {

// Hub joined to every vertex of a 10-cycle: 11 vertices, 20 edges.
wsc::Graph wheel() {
  std::vector<wsc::Edge> edges;
  for (std::uint32_t i = 0; i < 10; ++i) {
    edges.push_back({i, (i + 1) % 10});
    edges.push_back({i, 10});
  }
  return wsc::Graph(11, edges);
}

void BM_SubgraphSumWheel(benchmark::State& state) {
  const auto g = wheel();
  const wsc::EnumerationOptions options{wsc::kDefaultEdgeCap, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(wsc::z_subgraph_sum(g, options));
  state.counters["workers"] = static_cast<double>(state.range(0));
}
BENCHMARK(BM_SubgraphSumWheel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CircuitClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wsc::z_circuit(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CircuitClosedForm)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_OracleK4(benchmark::State& state) {
  const auto g = wsc::make_family(wsc::FamilyKind::Complete, 4);
  for (auto _ : state) benchmark::DoNotOptimize(wsc::oracle_z(g, 4, 2));
}
BENCHMARK(BM_OracleK4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
