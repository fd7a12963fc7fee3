#include <benchmark/benchmark.h>

#include <random>

#include "zspulse/circle_grid.hpp"
#include "zspulse/dist.hpp"
#include "zspulse/fft.hpp"
#include "zspulse/finite_rephasing.hpp"
#include "zspulse/forward.hpp"
#include "zspulse/marchenko.hpp"

using namespace zs;

namespace {

std::mt19937_64 rng(42);

Complex rand_c(double mag) {
  std::uniform_real_distribution<double> u(-mag, mag);
  return {u(rng), u(rng)};
}

HardPulse make_pulse(std::size_t len) {
  CVector om(len);
  for (auto& w : om) w = rand_c(0.7);
  return HardPulse(1.0, 0, std::move(om));
}

ReducedScatteringData make_data(std::size_t width) {
  CVector c(width);
  for (auto& v : c) v = rand_c(0.25);
  ReducedScatteringData d;
  d.r = LaurentSeries(-static_cast<std::int64_t>(2 * width / 3), std::move(c));
  d.bound_states.push_back({Complex{0.45, 0.2}, Complex{0.8, 0.1}});
  return d;
}

}  // namespace

static void BM_FFT(benchmark::State& state) {
  CVector data(static_cast<std::size_t>(state.range(0)));
  for (auto& v : data) v = rand_c(1.0);
  for (auto _ : state) {
    forward_fft(data);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FFT)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_ForwardScatter(benchmark::State& state) {
  const HardPulse p = make_pulse(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto fw = forward_scatter(p);
    benchmark::DoNotOptimize(fw.a);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardScatter)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_DistInvert(benchmark::State& state) {
  const ReducedScatteringData data = make_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto inv = dist_invert(data, 2048);
    benchmark::DoNotOptimize(inv.pulse);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistInvert)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_MarchenkoSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  CVector c(n);
  for (auto& v : c) v = rand_c(0.3);
  const LaurentSeries kernel(-static_cast<std::int64_t>(n), std::move(c));
  for (auto _ : state) {
    auto sol = marchenko_solve(kernel, n);
    benchmark::DoNotOptimize(sol.h);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MarchenkoSolve)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_SlrInvert(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  CVector b(t + 1);
  for (auto& v : b) v = rand_c(0.4);
  double maxb = 0.0;
  for (int k = 0; k < 512; ++k) {
    const double th = kTwoPi * k / 512.0;
    Complex acc{};
    Complex w{std::cos(th), std::sin(th)}, p{1.0, 0.0};
    for (const auto& v : b) {
      acc += v * p;
      p *= w;
    }
    maxb = std::max(maxb, std::abs(acc));
  }
  for (auto& v : b) v *= 0.9 / maxb;
  const SlrPair pair{spectral_factor_A_from_B(b), b, 0};
  for (auto _ : state) {
    auto p = slr_invert(pair);
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SlrInvert)->RangeMultiplier(2)->Range(8, 64)->Complexity();

BENCHMARK_MAIN();
