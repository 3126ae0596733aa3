// Parallel kernels against their serial reference versions.

#include <benchmark/benchmark.h>

#include "holozeta/cycles.hpp"
#include "holozeta/knot.hpp"
#include "holozeta/quandle.hpp"

using namespace holozeta;

namespace {

// Three vertices with loops and a 2-dimensional vertex in the middle.
MatrixGraph cycle_graph() {
  return parse_matrix_graph(
      "vertex a\nvertex b dim=2\nvertex c\n"
      "edge e1 a -> a weight=t\n"
      "edge e2 a -> b weight=[[1, t]]\n"
      "edge e3 b -> b weight=[[0, t], [1, 1/2]]\n"
      "edge e4 b -> c weight=[[t^-1], [1]]\n"
      "edge e5 c -> a weight=2\n"
      "edge e6 c -> c weight=1 - t\n");
}

CrossingWeights dihedral_weights(std::size_t n) {
  auto q = FiniteQuandle::dihedral(n);
  return f_twisted_weights(q, constant_pair(n, LaurentPoly::t()));
}

KnotDiagram braid_knot() { return braid_closure({1, -2, 1, -2, 1, -2, 1, -2}, 3); }

void BM_EnumerateCycles(benchmark::State& state) {
  auto g = cycle_graph();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_prime_cycles(g, 9));
}
void BM_EnumerateCyclesReference(benchmark::State& state) {
  auto g = cycle_graph();
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_prime_cycles(g, 9));
}

void BM_EulerProduct(benchmark::State& state) {
  auto g = cycle_graph();
  for (auto _ : state) benchmark::DoNotOptimize(euler_product(g, 7));
}
void BM_EulerProductReference(benchmark::State& state) {
  auto g = cycle_graph();
  for (auto _ : state) benchmark::DoNotOptimize(reference::euler_product(g, 7));
}

void BM_Holonomy(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto q = FiniteQuandle::dihedral(n);
  auto g = dihedral_weights(n);
  for (auto _ : state) benchmark::DoNotOptimize(holonomy_violations(q, g));
}
void BM_HolonomyReference(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto q = FiniteQuandle::dihedral(n);
  auto g = dihedral_weights(n);
  for (auto _ : state) benchmark::DoNotOptimize(reference::holonomy_violations(q, g));
}

void BM_Colorings(benchmark::State& state) {
  auto q = FiniteQuandle::dihedral(static_cast<std::size_t>(state.range(0)));
  auto d = braid_knot();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(q, d));
}
void BM_ColoringsReference(benchmark::State& state) {
  auto q = FiniteQuandle::dihedral(static_cast<std::size_t>(state.range(0)));
  auto d = braid_knot();
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_colorings(q, d));
}

}  // namespace

BENCHMARK(BM_EnumerateCycles)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateCyclesReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EulerProduct)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EulerProductReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Holonomy)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HolonomyReference)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Colorings)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColoringsReference)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
