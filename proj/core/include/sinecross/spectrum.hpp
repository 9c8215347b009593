#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sinecross/interp.hpp"

namespace sinecross {

inline constexpr double kDbFloor = -400.0;  // clamp for serialization

// One-sided amplitude spectrum of a real sequence, peak normalized to 0 dB.
// The raw (pre-normalization) complex bins are kept for difference spectra.
struct SpectrumResult {
  std::vector<double> bin_freqs;                // Hz, N/2+1 entries
  std::vector<double> amplitude_db;             // peak-normalized, clamped at kDbFloor
  std::vector<std::complex<double>> bins;       // raw one-sided DFT
  std::size_t transform_length = 0;             // N
  double spacing = 1.0;                         // T1, seconds
  double peak_magnitude = 0.0;                  // linear, pre-normalization
  bool degenerate = false;                      // all-zero input, no peak to normalize by
};

/// O(N log N) one-sided amplitude spectrum; no tapering window is applied.
SpectrumResult amplitude_spectrum(std::span<const double> samples, double spacing);

/// Resamples the crossings to a uniform grid n1 in [0, N-1] with spacing T1
/// and returns its amplitude spectrum. End-to-end O(N P + N log N).
SpectrumResult spectrum_from_crossings(const CrossingSequence& crossings,
                                       const InterpConfig& config,
                                       std::size_t transform_length, double spacing);

/// Per-bin amplitude of the complex difference of the two raw spectra,
/// in dB relative to a's peak magnitude.
std::vector<double> spectrum_diff(const SpectrumResult& a, const SpectrumResult& b);

}  // namespace sinecross
