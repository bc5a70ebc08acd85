#include <benchmark/benchmark.h>

#include "mcc/hirzebruch.hpp"
#include "mcc/lambda.hpp"
#include "mcc/motives.hpp"
#include "mcc/pontrjagin.hpp"

using namespace mcc;

static void BM_SeriesExp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PSeries a(n, LPoly(vars::genus()));
  for (std::size_t k = 1; k <= n; ++k) a.set(k, genus_y(Rational(static_cast<long>(k % 3))) * Rational(static_cast<long>(k)));
  for (auto _ : state) benchmark::DoNotOptimize(ts_exp(a));
}
BENCHMARK(BM_SeriesExp)->Arg(4)->Arg(8)->Arg(12);

static void BM_EulerLog(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PSeries a = surface_punctual_series(n);
  for (auto _ : state) benchmark::DoNotOptimize(euler_log(a));
}
BENCHMARK(BM_EulerLog)->Arg(4)->Arg(8)->Arg(12);

static void BM_HilbertClassSeries(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ModelPtr m = share(proj_space_model(2));
  for (auto _ : state) benchmark::DoNotOptimize(hilb_class_series(m, 2, n));
}
BENCHMARK(BM_HilbertClassSeries)->Arg(3)->Arg(5)->Arg(6);

static void BM_PontExp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ModelPtr m = share(builtin_model("P1xP1"));
  const PontSeries log = hom_log_inv(m, m->ty_class, 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(pont_exp(log));
}
BENCHMARK(BM_PontExp)->Arg(3)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
