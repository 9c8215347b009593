#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

namespace sinecross {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// sin(pi x)/(pi x), with sinc(0) = 1.
double sinc(double x);

/// sinc of a purely imaginary argument: sinc(j a) = sinh(pi a)/(pi a).
double sinc_imag(double a);

/// Raised-cosine pulse in time, unit peak at t = 0. The removable
/// singularities at t = +-symbol_period/(2 rolloff) are evaluated by a
/// local series expansion when the denominator is below 1e-8.
double raised_cosine_pulse(double t, double symbol_period, double rolloff);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

enum class SignalKind { bpsk, sinc_series, sum };

struct BpskParams {
  std::vector<int> symbols;        // +-1 amplitudes
  double rolloff = 0.2;            // in (0, 1]
  double symbol_period = 1.0;      // seconds
  std::uint64_t seed = 0;          // recorded when symbols were auto-generated
  double scale = 1.0;              // applied so the peak is 1
  long first_index = 0;            // symbols[i] is centered at (first_index+i)*symbol_period
};

struct SincSeriesParams {
  std::vector<double> coefficients;  // signal units
  double rate = 1.0;                 // samples per second, equals bandwidth B
  long origin_index = 0;             // coefficients[i] is the sample at (origin_index+i)/rate
};

class BandlimitedSignal;

struct SumParams {
  std::shared_ptr<const BandlimitedSignal> lhs;
  std::shared_ptr<const BandlimitedSignal> rhs;
};

// Evaluable real band-limited signal with declared two-sided bandwidth and
// supremum bound. Immutable after construction; eval is pure and reentrant.
class BandlimitedSignal {
 public:
  using Payload = std::variant<BpskParams, SincSeriesParams, SumParams>;

  BandlimitedSignal(SignalKind kind, double bandwidth, double sup_bound, Payload payload);

  double eval(double t) const;

  SignalKind kind() const { return kind_; }
  double bandwidth() const { return bandwidth_; }
  double sup_bound() const { return sup_bound_; }
  const Payload& payload() const { return payload_; }

  /// Same signal with a tighter (or re-measured) supremum declaration.
  BandlimitedSignal with_sup_bound(double sup_bound) const;

 private:
  SignalKind kind_;
  double bandwidth_;   // two-sided, Hz
  double sup_bound_;   // A_s
  Payload payload_;
};

/// Random +-1 symbol sequence, deterministic per seed.
std::vector<int> random_symbols(std::size_t count, std::uint64_t seed);

/// Peak-normalized BPSK signal with two-sided bandwidth (1+rolloff)/symbol_period.
/// Throws std::invalid_argument on an empty symbol list or rolloff outside (0,1].
BandlimitedSignal make_bpsk(std::vector<int> symbols, double rolloff,
                            double symbol_period, std::uint64_t seed = 0,
                            long first_index = 0);

/// Truncated cardinal series at rate B: sum_k c_k sinc(B t - k).
BandlimitedSignal make_sinc_series(std::vector<double> coefficients, double rate,
                                   long origin_index = 0);

/// Sum of two signals; bandwidth is the max, sup bound the sum of bounds.
BandlimitedSignal sum_signals(std::shared_ptr<const BandlimitedSignal> lhs,
                              std::shared_ptr<const BandlimitedSignal> rhs);

/// Max of |eval| over a dense grid (grid_density samples per 1/B) refined by
/// golden-section ascent around the grid maximum. Never below the grid max.
double estimate_sup(const BandlimitedSignal& signal, Interval interval,
                    double grid_density = 16.0);

/// Mean power over the interval by trapezoidal integration,
/// samples_per_nyquist points per 1/B.
double mean_power(const BandlimitedSignal& signal, Interval interval,
                  double samples_per_nyquist = 16.0);

/// Sinc-series noise with iid zero-mean Gaussian coefficients at rate B,
/// rescaled so the empirical mean power over the interval equals target_power.
/// Deterministic per seed.
BandlimitedSignal make_bandlimited_noise(double bandwidth, double target_power,
                                         Interval interval, std::uint64_t seed);

}  // namespace sinecross
