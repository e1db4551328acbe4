#include <benchmark/benchmark.h>

#include "broadcast/algorithms.hpp"
#include "broadcast/families.hpp"
#include "broadcast/isomorphism.hpp"
#include "broadcast/solver.hpp"
#include "broadcast/symmetry.hpp"

using namespace broadcast;

static void BM_AttractorClique(benchmark::State& state) {
  Graph g = complete_graph(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  SolverOptions o;
  o.threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) {
    auto table = agents_attractor(g, k, o);
    benchmark::DoNotOptimize(table.ranks().data());
    state.counters["states"] = static_cast<double>(table.state_count());
  }
}
BENCHMARK(BM_AttractorClique)->Args({5, 3, 1})->Args({6, 3, 1})->Args({6, 3, 4})->Unit(benchmark::kMillisecond);

static void BM_AttractorTheta(benchmark::State& state) {
  Graph g = theta_graph({3, 3, 3});
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto table = agents_attractor(g, k);
    benchmark::DoNotOptimize(table.ranks().data());
  }
}
BENCHMARK(BM_AttractorTheta)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SpanningTrees(benchmark::State& state) {
  Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(for_each_spanning_tree(g, [](const Graph&) { return true; }));
}
BENCHMARK(BM_SpanningTrees)->Arg(5)->Arg(6)->Arg(7);

static void BM_CanonicalForm(benchmark::State& state) {
  Graph g = grid_graph(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm);

static void BM_StsClique(benchmark::State& state) {
  Graph g = complete_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(has_k_sts(g, 2));
}
BENCHMARK(BM_StsClique)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
