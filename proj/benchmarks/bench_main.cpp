#include <benchmark/benchmark.h>

#include "hdc/chains.hpp"
#include "hdc/cheeger.hpp"
#include "hdc/generators.hpp"
#include "hdc/laplacian.hpp"
#include "hdc/random_complex.hpp"
#include "hdc/verify.hpp"

using namespace hdc;

static void BM_SpectralGapComplete(benchmark::State& state) {
  const auto x = generators::complete(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_gap(x).lambda);
  state.SetLabel("K_n^2");
}
BENCHMARK(BM_SpectralGapComplete)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_HYComplex(benchmark::State& state) {
  const auto y = generators::y_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cheeger::h(y).numerator);
}
BENCHMARK(BM_HYComplex)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_HPrimeMoebius(benchmark::State& state) {
  const auto z = generators::moebius_cyl(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cheeger::h_prime(z).numerator);
}
BENCHMARK(BM_HPrimeMoebius)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_PhiRandom(benchmark::State& state) {
  const auto x = random_complex(static_cast<int>(state.range(0)), 2, 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cheeger::phi(x).numerator);
}
BENCHMARK(BM_PhiRandom)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CosetWeight(benchmark::State& state) {
  const auto x = generators::complete(static_cast<int>(state.range(0)), 2);
  Z2Cochain f = Z2Cochain::zero(x, 1);
  for (std::size_t i = 0; i < f.size(); i += 3) f.bits[i] = true;
  for (auto _ : state) benchmark::DoNotOptimize(coset_weight(x, f));
}
BENCHMARK(BM_CosetWeight)->DenseRange(6, 12, 2);

static void BM_Proposition6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify::proposition6(5, 2).pass);
}
BENCHMARK(BM_Proposition6)->Unit(benchmark::kMillisecond);

static void BM_Theorem3Random(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify::theorem3(random_complex(7, 2, 0.5, seed++)).pass);
}
BENCHMARK(BM_Theorem3Random)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
