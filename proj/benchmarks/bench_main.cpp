#include <benchmark/benchmark.h>

#include "k3lat/binary_forms.hpp"
#include "k3lat/cm_twistor.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/genus.hpp"
#include "k3lat/k3_census.hpp"

using namespace k3lat;

static void BM_VectorsOfNorm(benchmark::State& state) {
  Lattice l{{4, 1, 0}, {1, 6, 2}, {0, 2, 10}};
  for (auto _ : state) benchmark::DoNotOptimize(vectors_of_norm(l, state.range(0)));
}
BENCHMARK(BM_VectorsOfNorm)->Arg(10)->Arg(40)->Arg(160);

static void BM_ClassGroup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(class_group(-state.range(0)));
}
BENCHMARK(BM_ClassGroup)->Arg(23)->Arg(499)->Arg(9999);

static void BM_Compose(benchmark::State& state) {
  auto g = class_group(-9999);
  const auto& f = g.elements[1];
  const auto& h = g.elements[g.order() / 2];
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, h));
}
BENCHMARK(BM_Compose);

static void BM_PadicSymbol(benchmark::State& state) {
  Lattice l{{2, 1, 0, 0}, {1, 12, 0, 0}, {0, 0, -4, 2}, {0, 0, 2, 6}};
  for (auto _ : state) benchmark::DoNotOptimize(padic_symbol(l, state.range(0)));
}
BENCHMARK(BM_PadicSymbol)->Arg(2)->Arg(3)->Arg(7);

static void BM_UnboundedFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_unbounded_family(state.range(0), 1));
}
BENCHMARK(BM_UnboundedFamily)->Arg(23)->Unit(benchmark::kMillisecond);

static void BM_PeriodEmbeddings(benchmark::State& state) {
  Lattice t{{2, -1}, {-1, 2}};
  auto k = CMField::imaginary_quadratic(-3);
  auto pv = normalize_period(PeriodVector{t, {k.one(), k.one() - k.generator()}});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_period_embeddings(pv, state.range(0)));
}
BENCHMARK(BM_PeriodEmbeddings)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
