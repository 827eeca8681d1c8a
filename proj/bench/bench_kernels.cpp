// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "hurwitz/braid.hpp"
#include "hurwitz/ffstats.hpp"

using namespace hurwitz;

namespace {

Rack s4_transpositions() {
  const auto s4 = GroupTable::symmetric(4);
  const GroupElem seed[] = {*s4.index_of(Perm::parse_cycles("(1 2)", 4))};
  return conjugation_rack(s4, seed).rack;
}

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void BM_orbit(benchmark::State& state) {
  const Rack r = s4_transpositions();
  const Tuple seed{0, 1, 2, 3, 4, 5};
  OrbitOptions opts;
  opts.execution = mode(state);
  for (auto _ : state) {
    const auto o = orbit(r, seed, opts);
    benchmark::DoNotOptimize(o.size());
  }
}

void BM_schreier(benchmark::State& state) {
  const Rack r = s4_transpositions();
  const auto o = orbit(r, {0, 1, 2, 3, 4, 5});
  for (auto _ : state) {
    const auto gens = schreier_generator_images(o.data(), mode(state));
    benchmark::DoNotOptimize(gens.size());
  }
}

void BM_z2(benchmark::State& state) {
  for (auto _ : state) {
    const auto s = z2_extension_stats(5, 6, mode(state));
    benchmark::DoNotOptimize(s.count);
  }
}

}  // namespace

// arg 0: serial, 1: parallel
BENCHMARK(BM_orbit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_schreier)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_z2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
