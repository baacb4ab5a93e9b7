// Parallel kernels against their serial references, plus end-to-end
// minimization of random constraint sets.

#include <benchmark/benchmark.h>

#include <random>

#include "lwo/graph.hpp"
#include "lwo/minimize.hpp"
#include "lwo/reach.hpp"
#include "random_ontology.hpp"

namespace {

lwo::Adjacency randomDag(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution arc(density);
  lwo::Adjacency adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (arc(rng)) adj[static_cast<std::size_t>(v)].push_back(w);
  return adj;
}

// Sparse enough to look like a constraint graph, dense enough to have depth.
double densityFor(int n) { return 4.0 / n; }

void BM_Reachability(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = randomDag(n, densityFor(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lwo::reachability(g));
  state.SetComplexityN(n);
}

void BM_ReachabilityReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = randomDag(n, densityFor(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lwo::reachabilityReference(g));
  state.SetComplexityN(n);
}

void BM_RedundantArcs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = randomDag(n, densityFor(n), 2);
  const auto reach = lwo::reachability(g);
  for (auto _ : state) benchmark::DoNotOptimize(lwo::redundantArcs(g, reach));
}

void BM_RedundantArcsReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = randomDag(n, densityFor(n), 2);
  for (auto _ : state) benchmark::DoNotOptimize(lwo::redundantArcsReference(g));
}

void BM_MinimizeConstraints(benchmark::State& state) {
  lwo::testing::RandomParams p;
  p.maxConstraints = static_cast<int>(state.range(0));
  p.concepts = p.maxConstraints / 2 + 2;
  p.roles = p.maxConstraints / 20 + 1;
  lwo::testing::Rng rng(3);
  const auto sigma = lwo::testing::randomConstraints(rng, p);
  for (auto _ : state) benchmark::DoNotOptimize(lwo::minimizeConstraints(sigma));
  state.counters["constraints"] = static_cast<double>(sigma.size());
}

void BM_BuildGraph(benchmark::State& state) {
  lwo::testing::RandomParams p;
  p.maxConstraints = static_cast<int>(state.range(0));
  p.concepts = p.maxConstraints / 2 + 2;
  p.roles = p.maxConstraints / 20 + 1;
  lwo::testing::Rng rng(4);
  const auto sigma = lwo::testing::randomConstraints(rng, p);
  for (auto _ : state) benchmark::DoNotOptimize(lwo::buildGraph(sigma));
}

}  // namespace

BENCHMARK(BM_Reachability)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(BM_ReachabilityReference)->RangeMultiplier(4)->Range(64, 1024)->Complexity();
BENCHMARK(BM_RedundantArcs)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_RedundantArcsReference)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_MinimizeConstraints)->Arg(50)->Arg(200)->Arg(800);
BENCHMARK(BM_BuildGraph)->Arg(50)->Arg(200)->Arg(800);

BENCHMARK_MAIN();
