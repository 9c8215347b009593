#pragma once

#include <vector>

#include "sinecross/crossings.hpp"

namespace sinecross {

// Static configuration of the reconstruction kernel: signal bandwidth B,
// crossing semi-period T, half-window P (2P+1 nodes), probe amplitude A.
struct InterpConfig {
  double bandwidth = 0.7;    // B, two-sided Hz
  double semi_period = 1.0;  // T, seconds
  int half_window = 8;       // P
  double amplitude = 1.0;    // A

  double window_bandwidth() const { return 1.0 / semi_period - bandwidth; }      // B_w
  double window_halfspan() const { return half_window * semi_period; }           // T_w

  void validate() const;  // throws std::invalid_argument on B T >= 1 or P < 1
};

/// Time-domain Kaiser-Bessel window sinc(B_w sqrt(t^2 - T_w^2)) / sinc(j B_w T_w).
/// For |t| < T_w the sinc argument is imaginary and is evaluated as
/// sinh(pi a)/(pi a); the two branches join continuously at |t| = T_w and
/// w(0) = 1 by construction.
double window_w(double t, const InterpConfig& config);

/// Band-limited weight function
///   gamma(t) = (-1)^P/(P!)^2 * w(t) prod_{|p|<=P}(t - pT) / sin(pi t / T).
/// The removable singularities at t = pT, |p| <= P, are evaluated by their
/// analytic limit; within 1e-9 T of a genuine singularity (sine zero with
/// |p| > P) a std::domain_error is thrown.
double gamma_weight(double t, const InterpConfig& config);

/// gamma in units of T: equals gamma_weight(x*T)/T^(2P+1) and depends only on
/// x = t/T, the product B*T and P.
double gamma_weight_normalized(double x, double bt, int half_window);

// Modulo-T decomposition t = nT + u with -T/2 <= u < T/2.
struct GridDecomposition {
  long n = 0;
  double u = 0.0;  // seconds
};

GridDecomposition grid_decompose(double t, double semi_period);

// 2P+1 strictly increasing instants tau_p = pT + eta_p and sample values.
struct NodeSet {
  std::vector<double> instants;
  std::vector<double> values;
};

/// Gamma-weighted Lagrange interpolation through the node set, evaluated in
/// barycentric product form. Exact at the nodes.
double lagrange_nonuniform(const NodeSet& nodes, const InterpConfig& config, double t);

/// Classical (unweighted) Lagrange interpolation; reproduces polynomials of
/// degree <= nodes-1 exactly. Used as the gamma == 1 reduction oracle.
double lagrange_classical(const NodeSet& nodes, double t);

// Precomputed reconstruction window for one grid index n: node positions,
// crossing values and combined barycentric coefficients. Building one is
// O(P^2); each evaluation is O(P). Immutable once built, so concurrent reads
// are safe.
class ReconstructionWindow {
 public:
  ReconstructionWindow(const CrossingSequence& crossings, const InterpConfig& config, long n);

  long index() const { return n_; }

  /// Evaluates the interpolant at t = nT + u, -T/2 <= u < T/2.
  double eval(double u) const;

 private:
  long n_;
  double semi_period_;
  double bt_;
  int half_window_;
  std::vector<double> xi_;      // node offsets in units of T: p + delta_{n+p}/T
  std::vector<double> values_;  // crossing values A(-1)^{n+p} sin(pi delta/T)
  std::vector<double> coeff_;   // values * gamma(tau_p) * barycentric weight
};

/// Reconstructs s(t) from the crossings: O(P) arithmetic per call once the
/// per-window coefficients are formed, independent of the sequence length.
/// Throws std::out_of_range when crossings [n-P, n+P] are not covered.
double reconstruct_at(const CrossingSequence& crossings, const InterpConfig& config, double t);

/// Samples s(n1 T1) for n1 in [n1_lo, n1_hi]; windows are cached per grid
/// index n, so the total cost is O(N P) for N outputs.
std::vector<double> resample_grid(const CrossingSequence& crossings,
                                  const InterpConfig& config, double spacing,
                                  long n1_lo, long n1_hi);

/// Fitted interpolation error in dB for node deviation bound delta
/// (as a fraction of T, < 1/2) and half-window P. The fit was made for
/// B T = 0.7; other regimes are extrapolation.
double predict_error_db(double delta_over_period, int half_window);

}  // namespace sinecross
