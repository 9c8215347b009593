#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sinecross/signal.hpp"

namespace sinecross {

// Reference sine wave A sin(pi t / T). Crossing-based acquisition requires
// A > A_s (strict) and B T < 1 (strict); the critical-rate case B T = 1 is
// rejected, only the strictly oversampled regime is supported.
struct SineProbe {
  double amplitude = 1.0;    // A, signal units
  double semi_period = 1.0;  // T, seconds
};

// Converter output: one shift per integer index in [n_first, n_first+len-1].
// The n-th crossing is at n T + deltas[n - n_first] and the signal value
// there is A (-1)^n sin(pi delta_n / T).
struct CrossingSequence {
  double semi_period = 1.0;  // T
  double amplitude = 1.0;    // A
  long n_first = 0;
  std::vector<double> deltas;

  long n_last() const { return n_first + static_cast<long>(deltas.size()) - 1; }
  bool covers(long n_lo, long n_hi) const { return n_lo >= n_first && n_hi <= n_last(); }

  double delta(long n) const { return deltas.at(static_cast<std::size_t>(n - n_first)); }
  double instant(long n) const { return static_cast<double>(n) * semi_period + delta(n); }
  double value(long n) const {
    const double s = (n & 1L) ? -1.0 : 1.0;
    return amplitude * s * std::sin(kPi * delta(n) / semi_period);
  }
};

// Thrown when a bracket unexpectedly has no sign change; under the probe
// preconditions this indicates a bad A_s declaration on the signal.
class DetectionFailure : public std::runtime_error {
 public:
  DetectionFailure(long index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  long index() const { return index_; }

 private:
  long index_;
};

/// s(t) - A sin(pi t / T).
double residual(const BandlimitedSignal& signal, const SineProbe& probe, double t);

/// Crossing detection on an arbitrary evaluator; sup_bound and bandwidth are
/// the declared A_s and B used to validate the probe.
CrossingSequence detect_callable(const std::function<double(double)>& eval,
                                 double sup_bound, double bandwidth,
                                 const SineProbe& probe, long n_lo, long n_hi);

/// Finds the unique zero of residual() in each rectangle [nT - T/2, nT + T/2]
/// for n in [n_lo, n_hi]. Bracketed bisection down to 1e-3 T, then Brent
/// refinement to 1e-13 T.
CrossingSequence detect(const BandlimitedSignal& signal, const SineProbe& probe,
                        long n_lo, long n_hi);

struct BoundReport {
  double max_abs_delta = 0.0;
  double bound = 0.0;  // (T/pi) arcsin(A_s / A)
  bool pass = false;
};

/// Checks max |delta_n| against the confinement bound (T/pi) arcsin(A_s/A).
BoundReport verify_bound(const CrossingSequence& crossings, double sup_bound);

}  // namespace sinecross
