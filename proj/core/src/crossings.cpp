#include "sinecross/crossings.hpp"

#include <algorithm>
#include <cmath>

namespace sinecross {

double residual(const BandlimitedSignal& signal, const SineProbe& probe, double t) {
  return signal.eval(t) - probe.amplitude * std::sin(kPi * t / probe.semi_period);
}

namespace {

// Bisection to width 1e-3 T, then Brent (inverse quadratic / secant with
// bisection fallback) to |dt| < 1e-13 T. The bracket [a, b] must have
// fa * fb < 0 on entry.
double refine_root(const std::function<double(double)>& f, double a, double b,
                   double fa, double fb, double semi_period) {
  const double coarse = 1e-3 * semi_period;
  while (b - a > coarse) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) == (fm < 0.0)) { a = m; fa = fm; }
    else                          { b = m; fb = fm; }
  }

  const double xtol = 1e-13 * semi_period;
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < 100; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double m = 0.5 * (c - b);
    if (fb == 0.0 || std::abs(m) <= xtol) return b;
    if (std::abs(e) < xtol || std::abs(fa) <= std::abs(fb)) {
      d = e = m;  // bisection
    } else {
      double p, q;
      const double s = fb / fa;
      if (a == c) {  // secant
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {  // inverse quadratic
        const double qa = fa / fc, r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(xtol * q), std::abs(e * q))) {
        e = d; d = p / q;
      } else {
        d = e = m;
      }
    }
    a = b; fa = fb;
    b += (std::abs(d) > xtol) ? d : (m > 0.0 ? xtol : -xtol);
    fb = f(b);
    if ((fb < 0.0) == (fc < 0.0)) { c = a; fc = fa; e = d = b - a; }
  }
  return b;
}

}  // namespace

CrossingSequence detect_callable(const std::function<double(double)>& eval,
                                 double sup_bound, double bandwidth,
                                 const SineProbe& probe, long n_lo, long n_hi) {
  const double A = probe.amplitude;
  const double T = probe.semi_period;
  if (!(T > 0.0)) throw std::invalid_argument("detect: semi-period must be positive");
  if (!(A > sup_bound)) throw std::invalid_argument("detect: probe amplitude must exceed the signal's A_s");
  if (!(bandwidth * T < 1.0)) throw std::invalid_argument("detect: requires strict B T < 1");
  if (n_hi < n_lo) throw std::invalid_argument("detect: empty index range");

  const auto f = [&](double t) { return eval(t) - A * std::sin(kPi * t / T); };

  CrossingSequence out;
  out.semi_period = T;
  out.amplitude = A;
  out.n_first = n_lo;
  out.deltas.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));

  for (long n = n_lo; n <= n_hi; ++n) {
    const double a = (static_cast<double>(n) - 0.5) * T;
    const double b = (static_cast<double>(n) + 0.5) * T;
    const double fa = f(a);
    const double fb = f(b);
    // Residual at the rectangle edges is s -+ A (-1)^n, so |s| <= A_s < A
    // guarantees a sign change.
    if (fa == 0.0) { out.deltas.push_back(a - static_cast<double>(n) * T); continue; }
    if (fb == 0.0) { out.deltas.push_back(b - static_cast<double>(n) * T); continue; }
    if ((fa < 0.0) == (fb < 0.0))
      throw DetectionFailure(n, "detect: no sign change in rectangle " + std::to_string(n) +
                                    " (declared A_s is not a valid bound)");
    const double root = refine_root(f, a, b, fa, fb, T);
    out.deltas.push_back(root - static_cast<double>(n) * T);
  }
  return out;
}

CrossingSequence detect(const BandlimitedSignal& signal, const SineProbe& probe,
                        long n_lo, long n_hi) {
  return detect_callable([&](double t) { return signal.eval(t); },
                         signal.sup_bound(), signal.bandwidth(), probe, n_lo, n_hi);
}

BoundReport verify_bound(const CrossingSequence& crossings, double sup_bound) {
  BoundReport report;
  const double ratio = std::min(1.0, sup_bound / crossings.amplitude);
  report.bound = (crossings.semi_period / kPi) * std::asin(ratio);
  for (double d : crossings.deltas)
    report.max_abs_delta = std::max(report.max_abs_delta, std::abs(d));
  report.pass = report.max_abs_delta <= report.bound + 1e-12 * crossings.semi_period;
  return report;
}

}  // namespace sinecross
