// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "twokind/bigpoly.hpp"
#include "twokind/identities.hpp"
#include "twokind/qbinomial.hpp"

namespace {

using namespace twokind;

// Two Gaussian polynomials of comparable degree (~n^2 / 4).
std::pair<IntPolynomial, IntPolynomial> operands(std::int64_t n) {
  return {gaussian({n, n / 2, 1}), gaussian({n + 1, n / 2, 1})};
}

void BM_MulSerial(benchmark::State& state) {
  const auto [a, b] = operands(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mul_serial(a, b));
  state.SetComplexityN(a.degree());
}

void BM_MulParallel(benchmark::State& state) {
  const auto [a, b] = operands(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mul_parallel(a, b));
  state.SetComplexityN(a.degree());
}

BENCHMARK(BM_MulSerial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SweepThm22(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Execution::serial : Execution::parallel;
  for (auto _ : state) benchmark::DoNotOptimize(verify_thm22({3, 3}, exec));
  state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}

void BM_SweepGuoYang(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Execution::serial : Execution::parallel;
  for (auto _ : state) benchmark::DoNotOptimize(verify_guo_yang_2({10, 10}, exec));
  state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}

BENCHMARK(BM_SweepThm22)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepGuoYang)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
