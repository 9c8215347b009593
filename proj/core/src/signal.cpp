#include "sinecross/signal.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sinecross {

double sinc(double x) {
  const double a = kPi * x;
  if (std::abs(a) < 1e-8) return 1.0 - a * a / 6.0;
  return std::sin(a) / a;
}

double sinc_imag(double a) {
  const double x = kPi * a;
  if (std::abs(x) < 1e-8) return 1.0 + x * x / 6.0;
  return std::sinh(x) / x;
}

double raised_cosine_pulse(double t, double symbol_period, double rolloff) {
  const double x = std::abs(t / symbol_period);
  const double den = 1.0 - (2.0 * rolloff * x) * (2.0 * rolloff * x);
  if (std::abs(den) < 1e-8) {
    // Expansion around x0 = 1/(2 rolloff):
    //   cos(pi r x)/den = (pi/4)(1 - r (x - x0)) + O((x-x0)^2)
    const double x0 = 1.0 / (2.0 * rolloff);
    return sinc(x) * (kPi / 4.0) * (1.0 - rolloff * (x - x0));
  }
  return sinc(x) * std::cos(kPi * rolloff * x) / den;
}

BandlimitedSignal::BandlimitedSignal(SignalKind kind, double bandwidth,
                                     double sup_bound, Payload payload)
    : kind_(kind), bandwidth_(bandwidth), sup_bound_(sup_bound),
      payload_(std::move(payload)) {
  if (bandwidth_ <= 0.0) throw std::invalid_argument("signal bandwidth must be positive");
}

double BandlimitedSignal::eval(double t) const {
  switch (kind_) {
    case SignalKind::bpsk: {
      const auto& p = std::get<BpskParams>(payload_);
      double acc = 0.0;
      for (std::size_t i = 0; i < p.symbols.size(); ++i) {
        const double center = static_cast<double>(p.first_index + static_cast<long>(i)) * p.symbol_period;
        acc += p.symbols[i] * raised_cosine_pulse(t - center, p.symbol_period, p.rolloff);
      }
      return p.scale * acc;
    }
    case SignalKind::sinc_series: {
      const auto& p = std::get<SincSeriesParams>(payload_);
      const double x = p.rate * t - static_cast<double>(p.origin_index);
      double acc = 0.0;
      for (std::size_t i = 0; i < p.coefficients.size(); ++i)
        acc += p.coefficients[i] * sinc(x - static_cast<double>(i));
      return acc;
    }
    case SignalKind::sum: {
      const auto& p = std::get<SumParams>(payload_);
      return p.lhs->eval(t) + p.rhs->eval(t);
    }
  }
  return 0.0;
}

BandlimitedSignal BandlimitedSignal::with_sup_bound(double sup_bound) const {
  return BandlimitedSignal(kind_, bandwidth_, sup_bound, payload_);
}

std::vector<int> random_symbols(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> symbols(count);
  for (auto& s : symbols) s = (rng() & 1u) ? 1 : -1;
  return symbols;
}

BandlimitedSignal make_bpsk(std::vector<int> symbols, double rolloff,
                            double symbol_period, std::uint64_t seed,
                            long first_index) {
  if (symbols.empty()) throw std::invalid_argument("make_bpsk: empty symbol list");
  if (!(rolloff > 0.0 && rolloff <= 1.0))
    throw std::invalid_argument("make_bpsk: rolloff must be in (0, 1]");
  if (symbol_period <= 0.0)
    throw std::invalid_argument("make_bpsk: symbol_period must be positive");

  BpskParams params;
  params.symbols = std::move(symbols);
  params.rolloff = rolloff;
  params.symbol_period = symbol_period;
  params.seed = seed;
  params.scale = 1.0;
  params.first_index = first_index;
  const double bandwidth = (1.0 + rolloff) / symbol_period;

  BandlimitedSignal raw(SignalKind::bpsk, bandwidth, 1.0, params);
  const double lo = (static_cast<double>(first_index) - 2.0) * symbol_period;
  const double hi = (static_cast<double>(first_index) +
                     static_cast<double>(params.symbols.size()) + 1.0) * symbol_period;
  const double peak = estimate_sup(raw, {lo, hi}, 32.0);
  params = std::get<BpskParams>(raw.payload());
  params.scale = 1.0 / peak;
  return BandlimitedSignal(SignalKind::bpsk, bandwidth, 1.0, std::move(params));
}

BandlimitedSignal make_sinc_series(std::vector<double> coefficients, double rate,
                                   long origin_index) {
  double bound = 0.0;
  for (double c : coefficients) bound += std::abs(c);
  SincSeriesParams params{std::move(coefficients), rate, origin_index};
  return BandlimitedSignal(SignalKind::sinc_series, rate, bound, std::move(params));
}

BandlimitedSignal sum_signals(std::shared_ptr<const BandlimitedSignal> lhs,
                              std::shared_ptr<const BandlimitedSignal> rhs) {
  const double bandwidth = std::max(lhs->bandwidth(), rhs->bandwidth());
  const double bound = lhs->sup_bound() + rhs->sup_bound();
  return BandlimitedSignal(SignalKind::sum, bandwidth, bound, SumParams{std::move(lhs), std::move(rhs)});
}

namespace {

// Golden-section ascent of |eval| on [a, b].
double golden_refine(const BandlimitedSignal& signal, double a, double b) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = std::abs(signal.eval(c));
  double fd = std::abs(signal.eval(d));
  for (int it = 0; it < 80 && (b - a) > 1e-15 * (1.0 + std::abs(a)); ++it) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - kInvPhi * (b - a);
      fc = std::abs(signal.eval(c));
    } else {
      a = c; c = d; fc = fd;
      d = a + kInvPhi * (b - a);
      fd = std::abs(signal.eval(d));
    }
  }
  return std::max(fc, fd);
}

}  // namespace

double estimate_sup(const BandlimitedSignal& signal, Interval interval,
                    double grid_density) {
  if (!(interval.hi > interval.lo))
    throw std::invalid_argument("estimate_sup: empty interval");
  if (grid_density < 8.0)
    throw std::invalid_argument("estimate_sup: grid_density must be >= 8");

  const double step = 1.0 / (signal.bandwidth() * grid_density);
  const std::size_t count = static_cast<std::size_t>(std::ceil(interval.length() / step)) + 1;
  double best = 0.0;
  double best_t = interval.lo;
  for (std::size_t i = 0; i <= count; ++i) {
    const double t = std::min(interval.lo + static_cast<double>(i) * step, interval.hi);
    const double v = std::abs(signal.eval(t));
    if (v > best) { best = v; best_t = t; }
  }
  const double a = std::max(interval.lo, best_t - step);
  const double b = std::min(interval.hi, best_t + step);
  return std::max(best, golden_refine(signal, a, b));
}

double mean_power(const BandlimitedSignal& signal, Interval interval,
                  double samples_per_nyquist) {
  if (!(interval.hi > interval.lo))
    throw std::invalid_argument("mean_power: empty interval");
  const std::size_t count = static_cast<std::size_t>(
      std::ceil(interval.length() * signal.bandwidth() * samples_per_nyquist));
  const double step = interval.length() / static_cast<double>(count);
  double acc = 0.0;
  for (std::size_t i = 0; i <= count; ++i) {
    const double v = signal.eval(interval.lo + static_cast<double>(i) * step);
    const double w = (i == 0 || i == count) ? 0.5 : 1.0;
    acc += w * v * v;
  }
  return acc * step / interval.length();
}

BandlimitedSignal make_bandlimited_noise(double bandwidth, double target_power,
                                         Interval interval, std::uint64_t seed) {
  if (target_power < 0.0)
    throw std::invalid_argument("make_bandlimited_noise: negative target power");
  const double pad = 16.0 / bandwidth;
  const long k_lo = static_cast<long>(std::floor((interval.lo - pad) * bandwidth));
  const long k_hi = static_cast<long>(std::ceil((interval.hi + pad) * bandwidth));
  std::vector<double> coeffs(static_cast<std::size_t>(k_hi - k_lo + 1));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& c : coeffs) c = gauss(rng);

  if (target_power == 0.0) {
    std::fill(coeffs.begin(), coeffs.end(), 0.0);
    return make_sinc_series(std::move(coeffs), bandwidth, k_lo);
  }

  BandlimitedSignal unit = make_sinc_series(coeffs, bandwidth, k_lo);
  const double measured = mean_power(unit, interval);
  const double gain = std::sqrt(target_power / measured);
  for (auto& c : coeffs) c *= gain;
  return make_sinc_series(std::move(coeffs), bandwidth, k_lo);
}

}  // namespace sinecross
