// Serial reference (one worker) against the OpenMP path on the same inputs.
// The thread count is the benchmark argument.
#include <benchmark/benchmark.h>

#include <thread>

#include "rlpart/edge_partization.hpp"
#include "rlpart/generate.hpp"
#include "rlpart/kernel.hpp"
#include "rlpart/oct.hpp"
#include "rlpart/parallel.hpp"
#include "rlpart/vertex_partization.hpp"

using namespace rlpart;

namespace {

int hw() {
  unsigned n = std::thread::hardware_concurrency();
  return n < 2 ? 2 : static_cast<int>(n);
}

void thread_args(benchmark::internal::Benchmark* b) {
  b->Arg(1)->Arg(hw())->Unit(benchmark::kMillisecond)->UseRealTime();
}

const Graph& planted_vertex_instance() {
  static const Graph g = [] {
    PlantedGraph pg = gen_rl_graph(90001, 30, {2, 2}, 0.3);
    return plant_vertex_noise(pg.graph, 91001, 3).graph;
  }();
  return g;
}

void BM_SolveVertex22(benchmark::State& state) {
  par::set_threads(static_cast<int>(state.range(0)));
  const Graph& g = planted_vertex_instance();
  for (auto _ : state) benchmark::DoNotOptimize(solve_vertex_22(g, 3));
  par::set_threads(1);
}
BENCHMARK(BM_SolveVertex22)->Apply(thread_args);

void BM_CompressVertex22(benchmark::State& state) {
  par::set_threads(static_cast<int>(state.range(0)));
  const Graph& g = planted_vertex_instance();
  auto best = solve_vertex_22(g, 3);
  // A deletion set one larger than optimal, to be compressed.
  VertexSet s_prime = best->deleted_vertices;
  for (int v = 0; v < g.n() && s_prime.size() < best->deleted_vertices.size() + 1; ++v)
    s_prime = set_union(s_prime, {v});
  for (auto _ : state) benchmark::DoNotOptimize(compress_vertex_22(g, s_prime, 3));
  par::set_threads(1);
}
BENCHMARK(BM_CompressVertex22)->Apply(thread_args);

void BM_SolveOct(benchmark::State& state) {
  par::set_threads(static_cast<int>(state.range(0)));
  Graph g = random_graph(92001, 40, 0.12);
  for (auto _ : state) benchmark::DoNotOptimize(solve_oct(g, g.n()));
  par::set_threads(1);
}
BENCHMARK(BM_SolveOct)->Apply(thread_args);

void BM_SolveEdge12(benchmark::State& state) {
  par::set_threads(static_cast<int>(state.range(0)));
  PlantedGraph pg = gen_rl_graph(93001, 24, {1, 2}, 0.3);
  Graph g = plant_edge_noise(pg, 93002, 4).graph;
  for (auto _ : state) benchmark::DoNotOptimize(solve_edge_12(g, 4));
  par::set_threads(1);
}
BENCHMARK(BM_SolveEdge12)->Apply(thread_args);

void BM_BuildToctInstances(benchmark::State& state) {
  par::set_threads(static_cast<int>(state.range(0)));
  Graph g(15);
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < 5; ++i) g.add_edge(5 * c + i, 5 * c + (i + 1) % 5);
  for (auto _ : state) benchmark::DoNotOptimize(build_toct_instances(g, 1));
  par::set_threads(1);
}
BENCHMARK(BM_BuildToctInstances)->Apply(thread_args);

}  // namespace

BENCHMARK_MAIN();
