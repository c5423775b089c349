// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "isoprod/aut0.hpp"
#include "isoprod/examples.hpp"
#include "isoprod/hodge.hpp"
#include "isoprod/search.hpp"

namespace {

using namespace isoprod;

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_HodgeDiamond(benchmark::State& state) {
  const AlgebraicDatum d = examples::example1(3, 3, 3);
  const EigenDimTable t = eigendim_table(d);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_diamond(t, mode(state)));
}
BENCHMARK(BM_HodgeDiamond)->ArgName("parallel")->Arg(0)->Arg(1);

void BM_AdmissibleCharacters(benchmark::State& state) {
  const AlgebraicDatum d = examples::example1(3, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(admissible_characters(d, mode(state)));
}
BENCHMARK(BM_AdmissibleCharacters)->ArgName("parallel")->Arg(0)->Arg(1);

void BM_Survey(benchmark::State& state) {
  SearchSpec s;
  s.group = {2, 4};
  s.max_branch = 3;
  for (auto _ : state) benchmark::DoNotOptimize(survey(s, mode(state)));
}
BENCHMARK(BM_Survey)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
