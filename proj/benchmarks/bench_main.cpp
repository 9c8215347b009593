#include <benchmark/benchmark.h>

#include <random>

#include "sinecross/spectrum.hpp"

using namespace sinecross;

namespace {

CrossingSequence random_crossings(long n_lo, long n_hi, std::uint64_t seed) {
  CrossingSequence out;
  out.semi_period = 1.0;
  out.amplitude = 1.0;
  out.n_first = n_lo;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> shift(-0.3, 0.3);
  out.deltas.resize(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (auto& d : out.deltas) d = shift(rng);
  return out;
}

InterpConfig config_for(int half_window) {
  InterpConfig config;
  config.bandwidth = 0.7;
  config.semi_period = 1.0;
  config.half_window = half_window;
  config.amplitude = 1.0;
  return config;
}

void bm_gamma_weight(benchmark::State& state) {
  const auto config = config_for(static_cast<int>(state.range(0)));
  double t = 0.1234;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_weight(t, config));
    t += 1e-4;
    if (t > 0.49) t = -0.49;
  }
}
BENCHMARK(bm_gamma_weight)->Arg(4)->Arg(8)->Arg(16);

void bm_reconstruct_at(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto config = config_for(p);
  const auto crossings = random_crossings(-(p + 2), 256 + p + 2, 7);
  double t = 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct_at(crossings, config, t));
    t += 0.37;
    if (t > 240.0) t = 10.0;
  }
}
BENCHMARK(bm_reconstruct_at)->Arg(4)->Arg(8)->Arg(16);

void bm_resample_grid(benchmark::State& state) {
  const long n = state.range(0);
  const auto config = config_for(8);
  const auto crossings = random_crossings(-10, n + 9, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(resample_grid(crossings, config, 1.0, 0, n - 1));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bm_resample_grid)->Arg(256)->Arg(4096)->Arg(16384);

void bm_amplitude_spectrum(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> samples(n);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (auto& s : samples) s = uni(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(amplitude_spectrum(samples, 1.0));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(bm_amplitude_spectrum)->Arg(1024)->Arg(16384);

}  // namespace

BENCHMARK_MAIN();
