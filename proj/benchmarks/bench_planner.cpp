#include <benchmark/benchmark.h>

#include "dutycast/baselines.hpp"
#include "dutycast/distributed.hpp"
#include "dutycast/experiments.hpp"
#include "dutycast/extended_graph.hpp"
#include "dutycast/solver.hpp"

namespace {

using namespace dutycast;

Topology make_topology(std::size_t n, int period) {
  ExperimentConfig cfg;
  cfg.n_nodes = n;
  cfg.periods = {period};
  cfg.duty_fraction = 0.5;
  return generate_topology(cfg, {period, n / 2}, 0);
}

void BM_ExtendedGraph(benchmark::State& state) {
  const auto topo = make_topology(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    ExtendedGraph g(topo.network);
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_ExtendedGraph)->Args({100, 20})->Args({150, 40})->Unit(benchmark::kMillisecond);

void BM_SolveMemtcs(benchmark::State& state) {
  const auto topo = make_topology(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)));
  SolverConfig cfg;
  cfg.steiner = state.range(2) == 0 ? SteinerAlgorithm::kKmb : SteinerAlgorithm::kMehlhorn;
  for (auto _ : state) benchmark::DoNotOptimize(solve_memtcs(topo.network, topo.instance, cfg));
  state.SetLabel(state.range(2) == 0 ? "kmb" : "mehlhorn");
}
BENCHMARK(BM_SolveMemtcs)
    ->Args({100, 20, 0})
    ->Args({100, 20, 1})
    ->Args({150, 40, 0})
    ->Args({150, 40, 1})
    ->Unit(benchmark::kMillisecond);

void BM_Baseline(benchmark::State& state) {
  const auto topo = make_topology(100, 20);
  const auto kind = static_cast<BaselineKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_baseline(kind, topo.network, topo.instance));
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_Baseline)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_DistributedCover(benchmark::State& state) {
  const auto topo = make_topology(100, 20);
  const ExtendedGraph g(topo.network);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_distributed_cover(g, topo.instance.terminals()));
}
BENCHMARK(BM_DistributedCover)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
