#include <cmath>
#include <random>

#include "doctest.h"
#include "sinecross/signal.hpp"
#include "sinecross/spectrum.hpp"

using namespace sinecross;

TEST_CASE("sinc and its imaginary-argument companion") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(sinc(0.5) == doctest::Approx(0.63661977236758134).epsilon(1e-14));
  CHECK(std::abs(sinc(1.0)) < 1e-15);
  CHECK(std::abs(sinc(7.0)) < 1e-14);
  CHECK(sinc_imag(0.0) == 1.0);
  CHECK(sinc_imag(1.0) == doctest::Approx(3.6760779103749777).epsilon(1e-14));
}

TEST_CASE("raised cosine pulse: peak, removable singularity, continuity") {
  const double ts = 1.0, rolloff = 0.2;
  CHECK(raised_cosine_pulse(0.0, ts, rolloff) == 1.0);
  // at t = ts/(2 rolloff) = 2.5 ts the analytic limit is (pi/4) sinc(2.5) = 0.1
  const double t0 = ts / (2.0 * rolloff);
  CHECK(raised_cosine_pulse(t0, ts, rolloff) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(raised_cosine_pulse(-t0, ts, rolloff) == doctest::Approx(0.1).epsilon(1e-12));
  for (double h : {1e-7, -1e-7, 1e-10, -1e-10})
    CHECK(raised_cosine_pulse(t0 + h, ts, rolloff) == doctest::Approx(0.1).epsilon(1e-5));
}

TEST_CASE("bpsk construction") {
  CHECK_THROWS_AS(make_bpsk({}, 0.2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_bpsk({1, -1}, 1.5, 1.0), std::invalid_argument);

  SUBCASE("single-symbol pulse identity") {
    const auto signal = make_bpsk({1}, 0.2, 1.0);
    CHECK(signal.eval(0.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(signal.bandwidth() == doctest::Approx(1.2));
  }

  SUBCASE("bandwidth and peak normalization at BT = 0.7") {
    const double symbol_period = 1.2 / 0.7;  // so B = 0.7 with T = 1
    const auto signal = make_bpsk(random_symbols(64, 5), 0.2, symbol_period, 5);
    CHECK(signal.bandwidth() == doctest::Approx(0.7).epsilon(1e-14));
    const double lo = -2.0 * symbol_period, hi = 66.0 * symbol_period;
    CHECK(estimate_sup(signal, {lo, hi}, 32.0) == doctest::Approx(1.0).epsilon(1e-6));
  }

  SUBCASE("auto-generated symbols are deterministic per seed") {
    CHECK(random_symbols(32, 9) == random_symbols(32, 9));
    CHECK(random_symbols(32, 9) != random_symbols(32, 10));
  }
}

TEST_CASE("sinc series evaluation") {
  SUBCASE("zero signal") {
    const auto zero = make_sinc_series({0.0, 0.0, 0.0}, 1.0);
    CHECK(zero.eval(0.37) == 0.0);
  }
  SUBCASE("unit coefficient at the origin") {
    const auto unit = make_sinc_series({1.0}, 1.0, 0);
    CHECK(unit.eval(0.0) == 1.0);
    CHECK(unit.eval(0.5) == doctest::Approx(0.63661977236758134).epsilon(1e-14));
  }
  SUBCASE("reproduces its own samples") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::vector<double> coeffs(33);
    for (auto& c : coeffs) c = coeff(rng);
    const double rate = 2.5;
    const auto signal = make_sinc_series(coeffs, rate, -16);
    for (long k = -16; k <= 16; ++k)
      CHECK(signal.eval(static_cast<double>(k) / rate) ==
            doctest::Approx(coeffs[static_cast<std::size_t>(k + 16)]).epsilon(1e-13));
  }
}

TEST_CASE("estimate_sup") {
  const auto unit = make_sinc_series({1.0}, 1.0, 0);
  CHECK_THROWS_AS(estimate_sup(unit, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(estimate_sup(unit, {0.0, 1.0}, 4.0), std::invalid_argument);
  CHECK(estimate_sup(unit, {-10.0, 10.0}) == doctest::Approx(1.0).epsilon(1e-12));

  // never below the evaluation-grid maximum
  const auto signal = make_bpsk(random_symbols(32, 11), 0.2, 1.5, 11);
  const double sup = estimate_sup(signal, {0.0, 48.0}, 16.0);
  double grid_max = 0.0;
  const double step = 1.0 / (signal.bandwidth() * 16.0);
  for (double t = 0.0; t <= 48.0; t += step)
    grid_max = std::max(grid_max, std::abs(signal.eval(t)));
  CHECK(sup >= grid_max);
}

TEST_CASE("band-limited noise") {
  SUBCASE("zero target power gives the zero signal") {
    const auto zero = make_bandlimited_noise(1.0, 0.0, {0.0, 64.0}, 2);
    CHECK(zero.eval(1.3) == 0.0);
  }
  SUBCASE("deterministic per seed") {
    const auto a = make_bandlimited_noise(1.0, 1.0, {0.0, 64.0}, 7);
    const auto b = make_bandlimited_noise(1.0, 1.0, {0.0, 64.0}, 7);
    CHECK(std::get<SincSeriesParams>(a.payload()).coefficients ==
          std::get<SincSeriesParams>(b.payload()).coefficients);
  }
  SUBCASE("empirical power matches the target within 5%") {
    const auto noise = make_bandlimited_noise(1.0, 1.0, {0.0, 512.0}, 4);
    const double power = mean_power(noise, {0.0, 512.0});
    CHECK(power > 0.95);
    CHECK(power < 1.05);
  }
}

TEST_CASE("bpsk spectrum is confined to |f| <= B/2") {
  const double symbol_period = 1.2 / 0.7;
  const auto signal = make_bpsk(random_symbols(128, 21), 0.2, symbol_period, 21);
  const double rate = 4.0 * signal.bandwidth();
  const double lo = -16.0 * symbol_period, hi = 144.0 * symbol_period;
  const std::size_t count = static_cast<std::size_t>((hi - lo) * rate);
  std::vector<double> samples(count);
  for (std::size_t i = 0; i < count; ++i)
    samples[i] = signal.eval(lo + static_cast<double>(i) / rate);
  const auto spectrum = amplitude_spectrum(samples, 1.0 / rate);
  double out_of_band = -400.0;
  for (std::size_t k = 0; k < spectrum.bin_freqs.size(); ++k)
    if (spectrum.bin_freqs[k] > 0.5 * signal.bandwidth() * 1.02)
      out_of_band = std::max(out_of_band, spectrum.amplitude_db[k]);
  CHECK(out_of_band <= -60.0);
}

TEST_CASE("sum signals") {
  auto a = std::make_shared<const BandlimitedSignal>(make_sinc_series({1.0}, 1.0, 0));
  auto b = std::make_shared<const BandlimitedSignal>(make_sinc_series({0.5}, 2.0, 0));
  const auto sum = sum_signals(a, b);
  CHECK(sum.bandwidth() == 2.0);
  CHECK(sum.sup_bound() == 1.5);
  CHECK(sum.eval(0.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(sum.with_sup_bound(1.2).sup_bound() == 1.2);
}
