#include <benchmark/benchmark.h>

#include "levytail/bounds.hpp"
#include "levytail/closed_forms.hpp"
#include "levytail/simulate.hpp"

using namespace levytail;

static void BM_LambdaQuadrature(benchmark::State& state) {
  const LevyModel m = make_tempered_stable(0.7, 1.0);
  double a = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda(m, a, Method::quadrature).value);
    a = a < 1.0 ? a * 1.01 : 1e-3;
  }
}
BENCHMARK(BM_LambdaQuadrature);

static void BM_BandSamplerDraw(benchmark::State& state) {
  const BandSampler band(make_power_law(1.0, 1.5, 2.0), 1e-3, 2.0);
  CounterRng rng({1, 0}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(band.draw(rng));
}
BENCHMARK(BM_BandSamplerDraw);

static void BM_AutoSelect(benchmark::State& state) {
  const LevyModel m = make_cauchy();
  for (auto _ : state) benchmark::DoNotOptimize(auto_select(m, 0.5, 1e-4).value);
}
BENCHMARK(BM_AutoSelect);

static void BM_CppExactTail(benchmark::State& state) {
  const JumpLaw law = symmetric_uniform_jump(0.2, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(cpp_exact_tail(2.0, law, 1.0, 0.05).prob);
}
BENCHMARK(BM_CppExactTail);

static void BM_EstimateComposed(benchmark::State& state) {
  const double t = 1e-2;
  const IncrementSampler inc(make_power_law(1.0, 1.5, 2.0), t, {1e-3, false});
  const Sampler s = [&](CounterRng& r) { return inc.draw(r); };
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_tail_prob(s, 0.5, t, n, {7, 0}).p_hat);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateComposed)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
