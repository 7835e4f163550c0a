#include <benchmark/benchmark.h>

#include "ncode/ncode.hpp"

namespace {

const ncode::NeuralCode& c22() {
  static const auto c = ncode::parse_code("134,1357,257,356,13,35,57");
  return c;
}

const ncode::NeuralCode& c24() {
  static const auto c = ncode::parse_code("123,1246,145,356,12,14,3,5,6");
  return c;
}

void BM_DecideC24(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ncode::decide(c24()));
}
BENCHMARK(BM_DecideC24);

void BM_DecideCone(benchmark::State& state) {
  auto c = ncode::parse_code("1237,12467,1457,3567,127,147,37,57,67,7");
  for (auto _ : state) benchmark::DoNotOptimize(ncode::decide(c));
}
BENCHMARK(BM_DecideCone);

void BM_ClassifyNerve(benchmark::State& state) {
  auto nerve = ncode::code_nerve(ncode::maximal_codewords(c24()));
  for (auto _ : state) benchmark::DoNotOptimize(ncode::classify_small_complex(nerve));
}
BENCHMARK(BM_ClassifyNerve);

void BM_MandatoryFaces(benchmark::State& state) {
  auto facets = ncode::maximal_codewords(c24());
  for (auto _ : state) benchmark::DoNotOptimize(ncode::mandatory_faces(facets));
}
BENCHMARK(BM_MandatoryFaces);

void BM_CodeOfRealizationC22(benchmark::State& state) {
  auto built = ncode::build_realization(c22());
  for (auto _ : state) benchmark::DoNotOptimize(ncode::code_of_realization(built.built->realization));
}
BENCHMARK(BM_CodeOfRealizationC22);

void BM_Atlas(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ncode::atlas({n, 3, false, false}));
}
BENCHMARK(BM_Atlas)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
