#include <benchmark/benchmark.h>

#include "biframe/builders.hpp"
#include "biframe/subbilocale.hpp"

using namespace biframe;

static void bm_coproduct_33(benchmark::State& state) {
  FramePtr three = chain_frame(3);
  for (auto _ : state) benchmark::DoNotOptimize(coproduct(three, three));
}
BENCHMARK(bm_coproduct_33);

static void bm_congruence_enumeration(benchmark::State& state) {
  FramePtr amb = biframe_33()->ambient();
  for (auto _ : state) benchmark::DoNotOptimize(all_congruences(amb));
}
BENCHMARK(bm_congruence_enumeration);

static void bm_subbilocale_lattice_33(benchmark::State& state) {
  BiframePtr l = biframe_33();
  for (auto _ : state) benchmark::DoNotOptimize(subbilocale_lattice(l));
}
BENCHMARK(bm_subbilocale_lattice_33);

BENCHMARK_MAIN();
