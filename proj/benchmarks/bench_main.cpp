#include <benchmark/benchmark.h>

#include "linerec/lll.hpp"
#include "linerec/pipeline.hpp"
#include "linerec/realize.hpp"

using namespace linerec;

namespace {

LengthVector lengths_for(const Graph& g, std::uint64_t seed) {
  return measure(g, sample_generic_configuration(g, static_cast<unsigned>(g.m() * g.m()), seed));
}

void BM_LllIntegral(benchmark::State& state) {
  const LatticeBasis b = build_lattice(lengths_for(complete_graph(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(lll_reduce(b));
}
BENCHMARK(BM_LllIntegral)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_LllRational(benchmark::State& state) {
  const LatticeBasis b = build_lattice(lengths_for(complete_graph(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(lll_reduce_rational(b));
}
BENCHMARK(BM_LllRational)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_Realize(benchmark::State& state) {
  const Graph g = generate_graph(GraphFamily::NearThreeRegular, state.range(0), 3);
  const IntMatrix w = cycle_space_matrix(g, configuration_orientation(g, sample_generic_configuration(g, 40, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(realize_graph(w));
}
BENCHMARK(BM_Realize)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ReconstructUnlabeled(benchmark::State& state) {
  const LengthVector l = lengths_for(complete_graph(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_unlabeled(l));
}
BENCHMARK(BM_ReconstructUnlabeled)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
