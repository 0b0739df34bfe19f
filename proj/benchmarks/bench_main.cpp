#include <benchmark/benchmark.h>

#include <random>

#include "wsat/constructions.hpp"
#include "wsat/designs.hpp"
#include "wsat/percolation.hpp"
#include "wsat/solver.hpp"
#include "wsat/templates.hpp"

using namespace wsat;

namespace {

Hypergraph path_graph(std::size_t n) {
  Hypergraph g(n, 2);
  for (Vertex v = 0; v + 1 < n; ++v) g.insert(Edge{v, v + 1});
  return g;
}

void BM_ClosureK3Path(benchmark::State& state) {
  const auto g = path_graph(static_cast<std::size_t>(state.range(0)));
  const auto h = clique_pattern(3);
  ClosureOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(closure(g, h, opts).percolated);
}
BENCHMARK(BM_ClosureK3Path)->Args({12, 1})->Args({20, 1})->Args({20, 4});

void BM_ClosureK4Cubic(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::bernoulli_distribution coin(0.4);
  Hypergraph g(static_cast<std::size_t>(state.range(0)), 3);
  for (const auto& e : missing_edges(g))
    if (coin(rng)) g.insert(e);
  const auto h = clique_pattern(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(closure(g, h).closure.edge_count());
}
BENCHMARK(BM_ClosureK4Cubic)->Arg(8)->Arg(10);

void BM_CreatesNewCopy(benchmark::State& state) {
  auto g = complete_graph(static_cast<std::size_t>(state.range(0)), 2);
  g.erase(Edge{0, 1});
  const auto h = clique_pattern(5);
  for (auto _ : state) benchmark::DoNotOptimize(creates_new_copy(g, h, Edge{0, 1}).has_value());
}
BENCHMARK(BM_CreatesNewCopy)->Arg(8)->Arg(16);

void BM_TemplateClosureCone(benchmark::State& state) {
  const auto g = cone_gadget({6, 3, 4, 3, 2, {}}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(template_closure(g, 4, 2).percolated);
}
BENCHMARK(BM_TemplateClosureCone);

void BM_SolverK4(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SolverOptions opts;
  opts.iso_pruning = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(wsat_exact(n, clique_pattern(4), opts).value);
}
BENCHMARK(BM_SolverK4)->Args({5, 0})->Args({5, 1})->Args({6, 1})->Unit(benchmark::kMillisecond);

void BM_GreedyCover(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_cover(N, 4, 3).blocks.size());
}
BENCHMARK(BM_GreedyCover)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_MainK3(benchmark::State& state) {
  Hypergraph star(4, 2);
  for (Vertex v = 1; v < 4; ++v) star.insert(Edge{0, v});
  const MainSpec spec{clique_pattern(3), 12, 4, 4, 0.1, star, std::nullopt, {}, 1};
  for (auto _ : state) benchmark::DoNotOptimize(main_construction(spec).percolated);
}
BENCHMARK(BM_MainK3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
