#include <benchmark/benchmark.h>

#include "treealpha/decomposition.hpp"
#include "treealpha/generators.hpp"
#include "treealpha/graph.hpp"
#include "treealpha/layered.hpp"
#include "treealpha/oracles.hpp"
#include "treealpha/ptas.hpp"
#include "treealpha/solver.hpp"

namespace ta = treealpha;

namespace {

ta::ObjectCollection disks(int n) {
  ta::GeneratorSpec spec;
  spec.kind = "unit_disks";
  spec.n = n;
  spec.seed = 99;
  return ta::generate_instance(spec);
}

void BM_IntersectionGraph(benchmark::State& state) {
  const auto c = disks(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ta::intersection_graph(c, ta::PathMode::Vertex));
  }
}
BENCHMARK(BM_IntersectionGraph)->Arg(100)->Arg(400);

void BM_LayeredConstruction(benchmark::State& state) {
  const auto c = disks(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ta::layered_td_unit_disks(c));
  }
}
BENCHMARK(BM_LayeredConstruction)->Arg(100)->Arg(400);

void BM_SqrtCompress(benchmark::State& state) {
  const auto c = disks(static_cast<int>(state.range(0)));
  const auto d = ta::layered_td_unit_disks(c);
  const auto g = ta::intersection_graph(c, ta::PathMode::Vertex);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ta::sqrt_compress(g, d.td, d.layering, static_cast<int>(d.declared_bound)));
  }
}
BENCHMARK(BM_SqrtCompress)->Arg(100)->Arg(400);

void BM_AlphaOracle(benchmark::State& state) {
  const auto c = disks(static_cast<int>(state.range(0)));
  const auto g = ta::intersection_graph(c, ta::PathMode::Vertex);
  std::vector<int> all(std::size_t(g.n()));
  for (int v = 0; v < g.n(); ++v) all[std::size_t(v)] = v;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ta::independence_number(g, all));
  }
}
BENCHMARK(BM_AlphaOracle)->Arg(60)->Arg(120);

void BM_SolveCompressed(benchmark::State& state) {
  const auto c = disks(static_cast<int>(state.range(0)));
  const auto d = ta::layered_td_unit_disks(c);
  const auto g = ta::intersection_graph(c, ta::PathMode::Vertex);
  const auto compressed =
      ta::sqrt_compress(g, d.td, d.layering, static_cast<int>(d.declared_bound));
  std::vector<ta::Weight> ws(std::size_t(g.n()), ta::Weight(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ta::mwis_on_td(ta::WeightedGraph{g, ws}, compressed));
  }
}
BENCHMARK(BM_SolveCompressed)->Arg(60);

void BM_ShiftingPtas(benchmark::State& state) {
  const auto c = disks(static_cast<int>(state.range(0)));
  std::vector<ta::Weight> ws(c.objects.size(), ta::Weight(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ta::ptas_mwis_shifting_geom(c, ws, 0.75));
  }
}
BENCHMARK(BM_ShiftingPtas)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
