#include "sinecross/interp.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace sinecross {

void InterpConfig::validate() const {
  if (!(semi_period > 0.0)) throw std::invalid_argument("InterpConfig: semi-period must be positive");
  if (!(bandwidth > 0.0)) throw std::invalid_argument("InterpConfig: bandwidth must be positive");
  if (!(bandwidth * semi_period < 1.0))
    throw std::invalid_argument("InterpConfig: requires strict B T < 1");
  if (half_window < 1) throw std::invalid_argument("InterpConfig: half-window P must be >= 1");
}

namespace {

// Window in units of T; depends only on x = t/T, bt = B*T and P.
double window_normalized(double x, double bt, int half_window) {
  const double bw = 1.0 - bt;  // B_w * T
  const double P = static_cast<double>(half_window);
  const double d2 = x * x - P * P;
  const double num = (d2 >= 0.0) ? sinc(bw * std::sqrt(d2))
                                 : sinc_imag(bw * std::sqrt(-d2));
  return num / sinc_imag(bw * P);
}

}  // namespace

double window_w(double t, const InterpConfig& config) {
  return window_normalized(t / config.semi_period,
                           config.bandwidth * config.semi_period, config.half_window);
}

double gamma_weight_normalized(double x, double bt, int half_window) {
  const int P = half_window;
  const double w = window_normalized(x, bt, P);
  const long m = std::lround(x);
  const double h = x - static_cast<double>(m);

  if (std::labs(m) <= P) {
    // sin zero at x = m cancels the matching Lagrange-kernel factor; pull
    // both out and evaluate the ratio (x - m)/sin(pi x) stably.
    double acc = 1.0;  // prod_{p != m} (x - p) / (P!)^2
    for (int p = 1; p <= P; ++p) {
      const double up = (m == p) ? 1.0 : (x - static_cast<double>(p));
      const double dn = (m == -p) ? 1.0 : (x + static_cast<double>(p));
      acc *= up * dn / (static_cast<double>(p) * static_cast<double>(p));
    }
    if (m != 0) acc *= x;
    const double ph = kPi * h;
    double ratio;  // h / sin(pi h), limit 1/pi
    if (std::abs(ph) < 1e-4) {
      const double y2 = ph * ph;
      ratio = (1.0 + y2 / 6.0 + 7.0 * y2 * y2 / 360.0) / kPi;
    } else {
      ratio = h / std::sin(ph);
    }
    const double sign = ((P + m) & 1L) ? -1.0 : 1.0;  // (-1)^P / (-1)^m
    return sign * w * acc * ratio;
  }

  if (std::abs(h) < 1e-9)
    throw std::domain_error("gamma: genuine singularity at t = " + std::to_string(m) +
                            " T (outside the ±P node span)");
  double acc = x;
  for (int p = 1; p <= P; ++p)
    acc *= (x - static_cast<double>(p)) * (x + static_cast<double>(p)) /
           (static_cast<double>(p) * static_cast<double>(p));
  const double sign = (P & 1) ? -1.0 : 1.0;
  return sign * w * acc / std::sin(kPi * x);
}

double gamma_weight(double t, const InterpConfig& config) {
  config.validate();
  const double T = config.semi_period;
  const double scale = std::pow(T, 2 * config.half_window + 1);
  return scale * gamma_weight_normalized(t / T, config.bandwidth * T, config.half_window);
}

GridDecomposition grid_decompose(double t, double semi_period) {
  if (!(semi_period > 0.0)) throw std::invalid_argument("grid_decompose: semi-period must be positive");
  const long n = static_cast<long>(std::floor(t / semi_period + 0.5));
  return {n, t - static_cast<double>(n) * semi_period};
}

double lagrange_classical(const NodeSet& nodes, double t) {
  const std::size_t count = nodes.instants.size();
  if (count == 0 || nodes.values.size() != count)
    throw std::invalid_argument("lagrange_classical: malformed node set");
  double acc = 0.0;
  for (std::size_t p = 0; p < count; ++p) {
    double term = nodes.values[p];
    for (std::size_t q = 0; q < count; ++q) {
      if (q == p) continue;
      const double dq = nodes.instants[p] - nodes.instants[q];
      if (dq == 0.0) throw std::invalid_argument("lagrange_classical: duplicate nodes");
      term *= (t - nodes.instants[q]) / dq;
    }
    acc += term;
  }
  return acc;
}

double lagrange_nonuniform(const NodeSet& nodes, const InterpConfig& config, double t) {
  config.validate();
  const int P = config.half_window;
  const std::size_t count = static_cast<std::size_t>(2 * P + 1);
  if (nodes.instants.size() != count || nodes.values.size() != count)
    throw std::invalid_argument("lagrange_nonuniform: expected 2P+1 nodes");
  for (std::size_t q = 1; q < count; ++q)
    if (!(nodes.instants[q] > nodes.instants[q - 1]))
      throw std::invalid_argument("lagrange_nonuniform: nodes must be strictly increasing");

  const double T = config.semi_period;
  const double bt = config.bandwidth * T;
  const double x = t / T;
  double acc = 0.0;
  for (std::size_t p = 0; p < count; ++p) {
    const double xp = nodes.instants[p] / T;
    if (std::abs(x - xp) < 1e-12) return nodes.values[p];
    double term = nodes.values[p] * gamma_weight_normalized(xp, bt, P);
    for (std::size_t q = 0; q < count; ++q) {
      if (q == p) continue;
      term *= (x - nodes.instants[q] / T) / (xp - nodes.instants[q] / T);
    }
    acc += term;
  }
  return acc / gamma_weight_normalized(x, bt, P);
}

ReconstructionWindow::ReconstructionWindow(const CrossingSequence& crossings,
                                           const InterpConfig& config, long n)
    : n_(n), semi_period_(config.semi_period),
      bt_(config.bandwidth * config.semi_period), half_window_(config.half_window) {
  config.validate();
  const int P = half_window_;
  const double T = semi_period_;
  if (crossings.semi_period != T)
    throw std::invalid_argument("reconstruct: config semi-period does not match the crossings");
  if (!crossings.covers(n - P, n + P))
    throw std::out_of_range("reconstruct: need crossings [" + std::to_string(n - P) + ", " +
                            std::to_string(n + P) + "], have [" + std::to_string(crossings.n_first) +
                            ", " + std::to_string(crossings.n_last()) + "]");

  const std::size_t count = static_cast<std::size_t>(2 * P + 1);
  xi_.resize(count);
  values_.resize(count);
  coeff_.resize(count);
  for (int p = -P; p <= P; ++p) {
    const std::size_t i = static_cast<std::size_t>(p + P);
    xi_[i] = static_cast<double>(p) + crossings.delta(n + p) / T;
    values_[i] = crossings.value(n + p);
  }
  for (std::size_t i = 0; i < count; ++i) {
    double weight = 1.0;  // 1 / prod_{q != i} (xi_i - xi_q), in units of T
    for (std::size_t q = 0; q < count; ++q)
      if (q != i) weight /= xi_[i] - xi_[q];
    coeff_[i] = values_[i] * gamma_weight_normalized(xi_[i], bt_, half_window_) * weight;
  }
}

double ReconstructionWindow::eval(double u) const {
  const double x = u / semi_period_;
  const std::size_t count = xi_.size();
  double ell = 1.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double d = x - xi_[i];
    if (std::abs(d) < 1e-12) return values_[i];  // 0/0 guard at nodes
    ell *= d;
    sum += coeff_[i] / d;
  }
  return ell * sum / gamma_weight_normalized(x, bt_, half_window_);
}

double reconstruct_at(const CrossingSequence& crossings, const InterpConfig& config, double t) {
  const auto grid = grid_decompose(t, config.semi_period);
  return ReconstructionWindow(crossings, config, grid.n).eval(grid.u);
}

std::vector<double> resample_grid(const CrossingSequence& crossings,
                                  const InterpConfig& config, double spacing,
                                  long n1_lo, long n1_hi) {
  if (!(spacing > 0.0)) throw std::invalid_argument("resample_grid: spacing must be positive");
  if (n1_hi < n1_lo) throw std::invalid_argument("resample_grid: empty output range");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n1_hi - n1_lo + 1));
  std::optional<ReconstructionWindow> window;
  for (long n1 = n1_lo; n1 <= n1_hi; ++n1) {
    const auto grid = grid_decompose(static_cast<double>(n1) * spacing, config.semi_period);
    if (!window || window->index() != grid.n) {
      try {
        window.emplace(crossings, config, grid.n);
      } catch (const std::out_of_range& e) {
        throw std::out_of_range("resample_grid: output index " + std::to_string(n1) +
                                ": " + e.what());
      }
    }
    out.push_back(window->eval(grid.u));
  }
  return out;
}

double predict_error_db(double delta_over_period, int half_window) {
  if (!(delta_over_period >= 0.0 && delta_over_period < 0.5))
    throw std::invalid_argument("predict_error_db: delta/T must lie in [0, 1/2)");
  const double d = delta_over_period;
  const double P = static_cast<double>(half_window);
  return 4.12106 + 66.6044 * d - 9.35838 * d * d - 8.30873 * P +
         3.13419 * d * P - 0.125803 * d * d * P;
}

}  // namespace sinecross
