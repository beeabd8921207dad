// Serial reference loop vs the OpenMP kernel on the same sweeps.

#include "qneg/qbinom.hpp"
#include "qneg/sweep.hpp"

#include <benchmark/benchmark.h>

namespace {

qneg::SweepParams params_for(std::string_view suite) {
  qneg::SweepParams p;
  p.n = {-12, 12};
  p.k = {-12, 12};
  if (suite == "qlucas") p.m = {2, 5};
  if (suite == "lucas") {
    p.n = {-50, 50};
    p.k = {-50, 50};
  }
  return p;
}

void run(benchmark::State& state, std::string_view suite, qneg::Execution execution) {
  const qneg::SweepParams params = params_for(suite);
  for (auto _ : state) {
    // cold cache each round so both paths do the same work
    qneg::clear_qbinom_cache();
    benchmark::DoNotOptimize(qneg::run_suite(suite, params, execution));
  }
}

void BM_Serial(benchmark::State& state, std::string_view suite) {
  run(state, suite, qneg::Execution::Serial);
}

void BM_Parallel(benchmark::State& state, std::string_view suite) {
  run(state, suite, qneg::Execution::Parallel);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Serial, strategies, "strategies")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Parallel, strategies, "strategies")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Serial, pascal, "pascal")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Parallel, pascal, "pascal")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Serial, qlucas, "qlucas")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Parallel, qlucas, "qlucas")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Serial, lucas, "lucas")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Parallel, lucas, "lucas")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
