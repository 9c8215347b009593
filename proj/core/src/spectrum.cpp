#include "sinecross/spectrum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace sinecross {

namespace {

// FFTW planning is not reentrant; execution of a ready plan is.
std::mutex g_fftw_mutex;

std::vector<std::complex<double>> real_fft(std::span<const double> samples) {
  const std::size_t n = samples.size();
  std::vector<double> in(samples.begin(), samples.end());
  std::vector<std::complex<double>> out(n / 2 + 1);
  {
    std::scoped_lock lock(g_fftw_mutex);
    fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                          reinterpret_cast<fftw_complex*>(out.data()),
                                          FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  return out;
}

double to_db(double magnitude, double peak) {
  if (!(magnitude > 0.0) || !(peak > 0.0)) return kDbFloor;
  return std::max(kDbFloor, 20.0 * std::log10(magnitude / peak));
}

}  // namespace

SpectrumResult amplitude_spectrum(std::span<const double> samples, double spacing) {
  if (samples.size() < 2) throw std::invalid_argument("amplitude_spectrum: need at least 2 samples");
  if (!(spacing > 0.0)) throw std::invalid_argument("amplitude_spectrum: spacing must be positive");

  SpectrumResult result;
  result.transform_length = samples.size();
  result.spacing = spacing;
  result.bins = real_fft(samples);

  const std::size_t bins = result.bins.size();
  result.bin_freqs.resize(bins);
  result.amplitude_db.resize(bins);
  for (std::size_t k = 0; k < bins; ++k)
    result.bin_freqs[k] = static_cast<double>(k) /
                          (static_cast<double>(samples.size()) * spacing);

  result.peak_magnitude = 0.0;
  for (const auto& b : result.bins)
    result.peak_magnitude = std::max(result.peak_magnitude, std::abs(b));
  result.degenerate = !(result.peak_magnitude > 0.0);
  for (std::size_t k = 0; k < bins; ++k)
    result.amplitude_db[k] = to_db(std::abs(result.bins[k]), result.peak_magnitude);
  return result;
}

SpectrumResult spectrum_from_crossings(const CrossingSequence& crossings,
                                       const InterpConfig& config,
                                       std::size_t transform_length, double spacing) {
  if (transform_length < 2)
    throw std::invalid_argument("spectrum_from_crossings: need at least 2 grid points");
  const auto samples = resample_grid(crossings, config, spacing, 0,
                                     static_cast<long>(transform_length) - 1);
  return amplitude_spectrum(samples, spacing);
}

std::vector<double> spectrum_diff(const SpectrumResult& a, const SpectrumResult& b) {
  if (a.bins.size() != b.bins.size() || a.transform_length != b.transform_length)
    throw std::invalid_argument("spectrum_diff: mismatched transform lengths");
  if (a.spacing != b.spacing)
    throw std::invalid_argument("spectrum_diff: mismatched grid spacings");
  std::vector<double> diff(a.bins.size());
  for (std::size_t k = 0; k < diff.size(); ++k)
    diff[k] = to_db(std::abs(a.bins[k] - b.bins[k]), a.peak_magnitude);
  return diff;
}

}  // namespace sinecross
