#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sinecross/interp.hpp"
#include "sinecross/signal.hpp"
#include "sinecross/spectrum.hpp"

namespace sinecross {

// Experiment driver. Internal convention: T = 1 (so B = BT numerically);
// the underlying library carries explicit units.
struct ExperimentConfig {
  std::string experiment;  // fig4 | fig1_3 | fig6 | fig5 | fig7 | fig8_9 | bench
  std::uint64_t seed = 1;
  std::size_t grid_length = 1024;  // N
  double bt = 0.7;
  double rolloff = 0.2;
  std::vector<double> amplitudes;    // per-experiment defaults when empty
  std::vector<int> half_windows;     // per-experiment defaults when empty
  std::vector<double> snr_list_db;   // default 0..120 step 10
  std::string out_dir = ".";
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
};

struct ExperimentReport {
  std::string experiment;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  bool passed() const;
};

/// Counter-based seed split: adding streams never perturbs other draws.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

/// BPSK test signal on [0, (N-1)T] extended by margin_periods * T on both
/// sides (T = 1), with symbols covering the extension plus pulse tails.
BandlimitedSignal make_experiment_bpsk(std::uint64_t seed, double bt, double rolloff,
                                       std::size_t grid_length, double margin_periods);

std::vector<double> eval_on_grid(const BandlimitedSignal& signal, double t0, double dt,
                                 std::size_t count);

/// sup |s(t) - shat(t)| in dB over grid points of [lo, hi]; reference holds
/// s(t0 + i dt).
double sup_error_db(const std::vector<double>& reference, double t0, double dt,
                    double lo, double hi, const CrossingSequence& crossings,
                    const InterpConfig& config);

// Interpolation error versus P for one probe amplitude (fig6 experiment).
struct SupErrorSweep {
  double amplitude = 0.0;
  double delta_bound_over_period = 0.0;  // (1/pi) arcsin(A_s / A)
  std::vector<int> half_windows;
  std::vector<double> sup_error_db;
};

SupErrorSweep measure_sup_errors(const BandlimitedSignal& signal, double amplitude,
                                 const std::vector<int>& half_windows,
                                 std::size_t grid_length, double points_per_period = 32.0);

// One SNR point of the noisy experiment (fig5/fig7 measurements).
struct NoiseSweepPoint {
  double snr_db = 0.0;
  double sample_dev_db = 0.0;            // RMS of w(nT), dB
  std::vector<double> rms_db;            // per P: RMS of s(nT) - shat1(nT)
  std::vector<double> sup_diff_db;       // per P: sup |s(nT)+w(nT) - shat1(nT)|
  int retries = 0;
};

/// Adds band-limited noise at each SNR, re-detects crossings of s + w and
/// measures the error norms. Noise realizations with sup |s+w| >= A are
/// redrawn with the next sub-seed (at most 16 times, then a hard error).
std::vector<NoiseSweepPoint> run_noise_sweep(std::uint64_t seed, double bt, double rolloff,
                                             std::size_t grid_length, double amplitude,
                                             const std::vector<int>& half_windows,
                                             const std::vector<double>& snr_list_db);

struct BenchPoint {
  std::size_t grid_length = 0;
  double resample_ns_per_sample = 0.0;
  double spectrum_ms = 0.0;
};

/// Times resample_grid and the crossing-to-spectrum pipeline on synthetic
/// seeded crossing sequences.
std::vector<BenchPoint> run_bench_sweep(std::uint64_t seed, int half_window,
                                        const std::vector<std::size_t>& grid_lengths);

/// Dispatches on config.experiment, writes CSV artifacts plus report.json
/// into config.out_dir and returns the report.
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace sinecross
