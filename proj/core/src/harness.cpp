#include "sinecross/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sinecross/io.hpp"

namespace sinecross {

namespace {

constexpr double kT = 1.0;  // harness time unit: one semi-period

// Regression ceiling for the fig8_9 difference-spectrum peak at the default
// configuration (SNR 40 dB, P=16, N=1024). Measured -157..-162 dB over
// several seeds; the ceiling leaves headroom for platform variation.
constexpr double kFig9RegressionDb = -120.0;

double to_db_amplitude(double x) {
  if (!(x > 0.0)) return kDbFloor;
  return std::max(kDbFloor, 20.0 * std::log10(x));
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_real(v[i]);
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string config_header(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "# experiment=" << cfg.experiment << " seed=" << cfg.seed
      << " n=" << cfg.grid_length << " bt=" << format_real(cfg.bt)
      << " rolloff=" << format_real(cfg.rolloff)
      << " amplitudes=" << join(cfg.amplitudes)
      << " half_windows=" << join(cfg.half_windows)
      << " snr_db=" << join(cfg.snr_list_db);
  return out.str();
}

std::ofstream open_csv(const ExperimentConfig& cfg, const std::string& name) {
  const auto path = std::filesystem::path(cfg.out_dir) / name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << config_header(cfg) << '\n';
  return out;
}

void write_report_json(const ExperimentConfig& cfg, const ExperimentReport& report) {
  const auto path = std::filesystem::path(cfg.out_dir) / "report.json";
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << "{\n  \"experiment\": \"" << report.experiment << "\",\n";
  out << "  \"config\": {\"seed\": " << cfg.seed << ", \"n\": " << cfg.grid_length
      << ", \"bt\": " << format_real(cfg.bt) << ", \"rolloff\": " << format_real(cfg.rolloff)
      << ", \"amplitudes\": \"" << join(cfg.amplitudes)
      << "\", \"half_windows\": \"" << join(cfg.half_windows)
      << "\", \"snr_db\": \"" << join(cfg.snr_list_db) << "\"},\n";
  out << "  \"checks\": [\n";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    out << "    {\"name\": \"" << c.name << "\", \"pass\": " << (c.pass ? "true" : "false")
        << ", \"value\": " << format_real(c.value)
        << ", \"threshold\": " << format_real(c.threshold) << "}";
    out << (i + 1 < report.checks.size() ? ",\n" : "\n");
  }
  out << "  ],\n  \"notes\": [";
  for (std::size_t i = 0; i < report.notes.size(); ++i)
    out << (i ? ", " : "") << '"' << report.notes[i] << '"';
  out << "],\n  \"pass\": " << (report.passed() ? "true" : "false") << "\n}\n";
}

struct NoisyRealization {
  std::shared_ptr<const BandlimitedSignal> noise;
  std::shared_ptr<const BandlimitedSignal> combined;  // with the measured sup declared
  CrossingSequence crossings;
  int retries = 0;
};

NoisyRealization make_noisy_realization(std::shared_ptr<const BandlimitedSignal> clean,
                                        double clean_power, double snr_db, double amplitude,
                                        std::uint64_t seed, std::uint64_t stream_base,
                                        std::size_t grid_length, double margin) {
  const double span = static_cast<double>(grid_length - 1) * kT;
  const double noise_power = clean_power / std::pow(10.0, snr_db / 10.0);
  for (int retry = 0; retry < 16; ++retry) {
    auto noise = std::make_shared<const BandlimitedSignal>(make_bandlimited_noise(
        clean->bandwidth(), noise_power, {0.0, span}, split_seed(seed, stream_base + static_cast<std::uint64_t>(retry))));
    auto combined = std::make_shared<const BandlimitedSignal>(sum_signals(clean, noise));
    const double sup = estimate_sup(*combined, {-margin, span + margin}, 16.0);
    const double declared = sup * (1.0 + 1e-6);
    if (!(declared < amplitude)) continue;
    try {
      const long n_margin = static_cast<long>(std::ceil(margin));
      CrossingSequence crossings =
          detect(combined->with_sup_bound(declared), {amplitude, kT},
                 -n_margin, static_cast<long>(grid_length - 1) + n_margin);
      return {std::move(noise), std::move(combined), std::move(crossings), retry};
    } catch (const DetectionFailure&) {
      // declared bound was optimistic for this draw; try the next sub-seed
    }
  }
  throw std::runtime_error("noise realization keeps violating sup |s+w| < A at SNR " +
                           format_real(snr_db) + " dB");
}

template <class F>
double time_best_seconds(F&& fn, double min_seconds = 0.05, int trials = 3) {
  using clock = std::chrono::steady_clock;
  double best = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    int reps = 0;
    const auto start = clock::now();
    double elapsed = 0.0;
    do {
      fn();
      ++reps;
      elapsed = std::chrono::duration<double>(clock::now() - start).count();
    } while (elapsed < min_seconds);
    best = std::min(best, elapsed / reps);
  }
  return best;
}

CrossingSequence synthetic_crossings(std::uint64_t seed, long n_lo, long n_hi) {
  CrossingSequence out;
  out.semi_period = kT;
  out.amplitude = 1.0;
  out.n_first = n_lo;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> shift(-0.3, 0.3);
  out.deltas.resize(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (auto& d : out.deltas) d = shift(rng);
  return out;
}

}  // namespace

bool ExperimentReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 step on master + stream * golden ratio
  std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

BandlimitedSignal make_experiment_bpsk(std::uint64_t seed, double bt, double rolloff,
                                       std::size_t grid_length, double margin_periods) {
  const double bandwidth = bt / kT;
  const double symbol_period = (1.0 + rolloff) / bandwidth;
  const double lo = -margin_periods * kT;
  const double hi = static_cast<double>(grid_length - 1) * kT + margin_periods * kT;
  const long first = static_cast<long>(std::floor(lo / symbol_period)) - 6;
  const long last = static_cast<long>(std::ceil(hi / symbol_period)) + 6;
  const std::size_t count = static_cast<std::size_t>(last - first + 1);
  return make_bpsk(random_symbols(count, seed), rolloff, symbol_period, seed, first);
}

std::vector<double> eval_on_grid(const BandlimitedSignal& signal, double t0, double dt,
                                 std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = signal.eval(t0 + static_cast<double>(i) * dt);
  return out;
}

double sup_error_db(const std::vector<double>& reference, double t0, double dt,
                    double lo, double hi, const CrossingSequence& crossings,
                    const InterpConfig& config) {
  const auto i0 = static_cast<std::size_t>(std::max(0.0, std::ceil((lo - t0) / dt - 1e-9)));
  const auto i1 = static_cast<std::size_t>(std::floor((hi - t0) / dt + 1e-9));
  std::optional<ReconstructionWindow> window;
  double sup = 0.0;
  for (std::size_t i = i0; i <= i1 && i < reference.size(); ++i) {
    const double t = t0 + static_cast<double>(i) * dt;
    const auto grid = grid_decompose(t, config.semi_period);
    if (!window || window->index() != grid.n) window.emplace(crossings, config, grid.n);
    sup = std::max(sup, std::abs(reference[i] - window->eval(grid.u)));
  }
  return to_db_amplitude(sup);
}

SupErrorSweep measure_sup_errors(const BandlimitedSignal& signal, double amplitude,
                                 const std::vector<int>& half_windows,
                                 std::size_t grid_length, double points_per_period) {
  SupErrorSweep sweep;
  sweep.amplitude = amplitude;
  sweep.half_windows = half_windows;
  sweep.delta_bound_over_period =
      std::asin(std::min(1.0, signal.sup_bound() / amplitude)) / kPi;

  const int max_p = *std::max_element(half_windows.begin(), half_windows.end());
  const long margin = max_p + 2;
  const long n_hi = static_cast<long>(grid_length - 1);
  const CrossingSequence crossings = detect(signal, {amplitude, kT}, -margin, n_hi + margin);

  const double dt = kT / points_per_period;
  const std::size_t count =
      static_cast<std::size_t>(points_per_period) * (grid_length - 1) + 1;
  const std::vector<double> reference = eval_on_grid(signal, 0.0, dt, count);

  for (int p : half_windows) {
    const InterpConfig config{signal.bandwidth(), kT, p, amplitude};
    sweep.sup_error_db.push_back(sup_error_db(reference, 0.0, dt,
                                              static_cast<double>(p),
                                              static_cast<double>(n_hi - p),
                                              crossings, config));
  }
  return sweep;
}

std::vector<NoiseSweepPoint> run_noise_sweep(std::uint64_t seed, double bt, double rolloff,
                                             std::size_t grid_length, double amplitude,
                                             const std::vector<int>& half_windows,
                                             const std::vector<double>& snr_list_db) {
  const int max_p = *std::max_element(half_windows.begin(), half_windows.end());
  const double margin = static_cast<double>(max_p + 2);
  auto clean = std::make_shared<const BandlimitedSignal>(
      make_experiment_bpsk(split_seed(seed, 0), bt, rolloff, grid_length, margin));
  const double span = static_cast<double>(grid_length - 1) * kT;
  const double clean_power = mean_power(*clean, {0.0, span});

  std::vector<double> clean_samples(grid_length);
  for (std::size_t n = 0; n < grid_length; ++n)
    clean_samples[n] = clean->eval(static_cast<double>(n) * kT);

  std::vector<NoiseSweepPoint> points;
  for (std::size_t i = 0; i < snr_list_db.size(); ++i) {
    const auto realization = make_noisy_realization(clean, clean_power, snr_list_db[i],
                                                    amplitude, seed, 1000 + 16 * i,
                                                    grid_length, margin);
    NoiseSweepPoint point;
    point.snr_db = snr_list_db[i];
    point.retries = realization.retries;

    double dev_sq = 0.0;
    std::vector<double> noisy_samples(grid_length);
    for (std::size_t n = 0; n < grid_length; ++n) {
      const double w = realization.noise->eval(static_cast<double>(n) * kT);
      dev_sq += w * w;
      noisy_samples[n] = clean_samples[n] + w;
    }
    point.sample_dev_db = to_db_amplitude(std::sqrt(dev_sq / static_cast<double>(grid_length)));

    for (int p : half_windows) {
      const InterpConfig config{clean->bandwidth(), kT, p, amplitude};
      const auto recon = resample_grid(realization.crossings, config, kT, 0,
                                       static_cast<long>(grid_length - 1));
      double rms_sq = 0.0;
      double sup_diff = 0.0;
      for (std::size_t n = 0; n < grid_length; ++n) {
        const double e = clean_samples[n] - recon[n];
        rms_sq += e * e;
        sup_diff = std::max(sup_diff, std::abs(noisy_samples[n] - recon[n]));
      }
      point.rms_db.push_back(to_db_amplitude(std::sqrt(rms_sq / static_cast<double>(grid_length))));
      point.sup_diff_db.push_back(to_db_amplitude(sup_diff));
    }
    points.push_back(std::move(point));
  }
  return points;
}

std::vector<BenchPoint> run_bench_sweep(std::uint64_t seed, int half_window,
                                        const std::vector<std::size_t>& grid_lengths) {
  std::vector<BenchPoint> points;
  for (std::size_t n : grid_lengths) {
    const long n_hi = static_cast<long>(n - 1);
    const long margin = half_window + 2;
    const CrossingSequence crossings =
        synthetic_crossings(split_seed(seed, n), -margin, n_hi + margin);
    const InterpConfig config{0.7 / kT, kT, half_window, 1.0};

    double sink = 0.0;
    const double resample_s = time_best_seconds([&] {
      const auto samples = resample_grid(crossings, config, kT, 0, n_hi);
      sink += samples.back();
    });
    const double spectrum_s = time_best_seconds([&] {
      const auto spec = spectrum_from_crossings(crossings, config, n, kT);
      sink += spec.peak_magnitude;
    });
    if (sink == 42.0) throw std::logic_error("unreachable");  // keep the work observable

    points.push_back({n, resample_s * 1e9 / static_cast<double>(n), spectrum_s * 1e3});
  }
  return points;
}

namespace {

ExperimentReport run_fig4(ExperimentConfig cfg) {
  ExperimentReport report{"fig4", {}, {}};
  const BandlimitedSignal signal =
      make_experiment_bpsk(split_seed(cfg.seed, 0), cfg.bt, cfg.rolloff, cfg.grid_length, 2.0);
  const double span = static_cast<double>(cfg.grid_length - 1) * kT;

  auto csv = open_csv(cfg, "fig4.csv");
  csv << "t,value\n";
  const double dt = kT / 32.0;
  for (double t = 0.0; t <= span + 1e-12; t += dt)
    csv << format_real(t) << ',' << format_real(signal.eval(t)) << '\n';
  save_signal(signal, (std::filesystem::path(cfg.out_dir) / "signal.json").string());

  const double peak = estimate_sup(signal, {0.0, span}, 32.0);
  report.checks.push_back({"peak_normalized", std::abs(peak - 1.0) <= 1e-6, peak, 1e-6});
  return report;
}

ExperimentReport run_fig1_3(ExperimentConfig cfg) {
  ExperimentReport report{"fig1_3", {}, {}};
  if (cfg.amplitudes.empty()) cfg.amplitudes = {1.1};
  const double amplitude = cfg.amplitudes.front();
  const BandlimitedSignal signal =
      make_experiment_bpsk(split_seed(cfg.seed, 0), cfg.bt, cfg.rolloff, cfg.grid_length, 8.0);

  const double span = static_cast<double>(cfg.grid_length - 1) * kT;
  const double lo = std::min(0.4 * span, span / 2.0 - 10.0 * kT);
  const double hi = lo + std::min(20.0 * kT, span / 2.0);
  const long n_lo = static_cast<long>(std::floor(lo)) - 6;
  const long n_hi = static_cast<long>(std::ceil(hi)) + 6;
  const CrossingSequence crossings = detect(signal, {amplitude, kT}, n_lo, n_hi);
  save_crossings(crossings, (std::filesystem::path(cfg.out_dir) / "crossings.csv").string());

  const InterpConfig config_p2{signal.bandwidth(), kT, 2, amplitude};
  const InterpConfig config_p3{signal.bandwidth(), kT, 3, amplitude};
  auto csv = open_csv(cfg, "fig1_3.csv");
  csv << "t,signal,sine,recon_p2,recon_p3\n";
  double sup2 = 0.0, sup3 = 0.0;
  const double dt = kT / 64.0;
  for (double t = lo; t <= hi + 1e-12; t += dt) {
    const double s = signal.eval(t);
    const double r2 = reconstruct_at(crossings, config_p2, t);
    const double r3 = reconstruct_at(crossings, config_p3, t);
    sup2 = std::max(sup2, std::abs(s - r2));
    sup3 = std::max(sup3, std::abs(s - r3));
    csv << format_real(t) << ',' << format_real(s) << ','
        << format_real(amplitude * std::sin(kPi * t / kT)) << ','
        << format_real(r2) << ',' << format_real(r3) << '\n';
  }
  report.checks.push_back({"p3_tighter_than_p2", sup3 < sup2, to_db_amplitude(sup3),
                           to_db_amplitude(sup2)});
  return report;
}

ExperimentReport run_fig6(ExperimentConfig cfg) {
  ExperimentReport report{"fig6", {}, {}};
  if (cfg.amplitudes.empty()) cfg.amplitudes = {1.1, 16.0};
  if (cfg.half_windows.empty())
    for (int p = 2; p <= 16; ++p) cfg.half_windows.push_back(p);
  if (cfg.bt != 0.7)
    report.notes.push_back("error-fit regime is BT=0.7; this run is extrapolation");

  const int max_p = *std::max_element(cfg.half_windows.begin(), cfg.half_windows.end());
  const BandlimitedSignal signal = make_experiment_bpsk(
      split_seed(cfg.seed, 0), cfg.bt, cfg.rolloff, cfg.grid_length,
      static_cast<double>(max_p + 2));

  auto csv = open_csv(cfg, "fig6.csv");
  csv << "A,P,sup_error_db\n";
  std::vector<SupErrorSweep> sweeps;
  for (double amplitude : cfg.amplitudes) {
    sweeps.push_back(measure_sup_errors(signal, amplitude, cfg.half_windows, cfg.grid_length));
    for (std::size_t k = 0; k < cfg.half_windows.size(); ++k)
      csv << format_real(amplitude) << ',' << cfg.half_windows[k] << ','
          << format_real(sweeps.back().sup_error_db[k]) << '\n';
  }

  for (const auto& sweep : sweeps) {
    double worst_rise = -1e9;
    for (std::size_t k = 0; k + 1 < sweep.sup_error_db.size(); ++k) {
      if (sweep.half_windows[k] > 12 || sweep.sup_error_db[k] < -250.0) break;
      worst_rise = std::max(worst_rise, sweep.sup_error_db[k + 1] - sweep.sup_error_db[k]);
    }
    report.checks.push_back({"monotone_decay_a=" + format_real(sweep.amplitude),
                             worst_rise < 0.0, worst_rise, 0.0});
  }
  if (sweeps.size() >= 2) {
    const auto it = std::find(cfg.half_windows.begin(), cfg.half_windows.end(), 8);
    if (it != cfg.half_windows.end()) {
      const auto k = static_cast<std::size_t>(it - cfg.half_windows.begin());
      const double gap = std::abs(sweeps[0].sup_error_db[k] - sweeps[1].sup_error_db[k]);
      report.checks.push_back({"amplitude_insensitivity_p8", gap <= 10.0, gap, 10.0});
    }
  }
  return report;
}

ExperimentReport run_fig5_fig7(ExperimentConfig cfg) {
  ExperimentReport report{"fig5_fig7", {}, {}};
  if (cfg.amplitudes.empty()) cfg.amplitudes = {3.0};
  if (cfg.half_windows.empty()) cfg.half_windows = {4, 9};
  if (cfg.snr_list_db.empty())
    for (int snr = 0; snr <= 120; snr += 10) cfg.snr_list_db.push_back(snr);

  const auto points = run_noise_sweep(cfg.seed, cfg.bt, cfg.rolloff, cfg.grid_length,
                                      cfg.amplitudes.front(), cfg.half_windows,
                                      cfg.snr_list_db);

  auto csv = open_csv(cfg, "fig5_fig7.csv");
  csv << "snr_db,sample_dev_db";
  for (int p : cfg.half_windows) csv << ",rms_p" << p << "_db";
  for (int p : cfg.half_windows) csv << ",sup_diff_p" << p << "_db";
  csv << ",retries\n";
  for (const auto& point : points) {
    csv << format_real(point.snr_db) << ',' << format_real(point.sample_dev_db);
    for (double v : point.rms_db) csv << ',' << format_real(v);
    for (double v : point.sup_diff_db) csv << ',' << format_real(v);
    csv << ',' << point.retries << '\n';
  }

  // Departure point: first SNR where the RMS curve leaves the sample
  // deviation by more than 1 dB. Larger P must depart later.
  std::vector<std::size_t> departure(cfg.half_windows.size(), points.size());
  for (std::size_t k = 0; k < cfg.half_windows.size(); ++k)
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].rms_db[k] - points[i].sample_dev_db > 1.0) { departure[k] = i; break; }

  report.checks.push_back({"low_snr_overlap_p" + std::to_string(cfg.half_windows.front()),
                           departure.front() >= 1,
                           static_cast<double>(departure.front()), 1.0});
  for (std::size_t k = 0; k + 1 < departure.size(); ++k)
    report.checks.push_back(
        {"departure_ordering_p" + std::to_string(cfg.half_windows[k]) + "_p" +
             std::to_string(cfg.half_windows[k + 1]),
         departure[k + 1] > departure[k], static_cast<double>(departure[k + 1]),
         static_cast<double>(departure[k])});
  return report;
}

ExperimentReport run_fig8_fig9(ExperimentConfig cfg) {
  ExperimentReport report{"fig8_9", {}, {}};
  if (cfg.amplitudes.empty()) cfg.amplitudes = {3.0};
  if (cfg.half_windows.empty()) cfg.half_windows = {16};
  if (cfg.snr_list_db.empty()) cfg.snr_list_db = {40.0};
  const double amplitude = cfg.amplitudes.front();
  const int half_window = cfg.half_windows.front();
  const double margin = static_cast<double>(half_window + 2);

  auto clean = std::make_shared<const BandlimitedSignal>(
      make_experiment_bpsk(split_seed(cfg.seed, 0), cfg.bt, cfg.rolloff, cfg.grid_length, margin));
  const double span = static_cast<double>(cfg.grid_length - 1) * kT;
  const double clean_power = mean_power(*clean, {0.0, span});
  const auto realization =
      make_noisy_realization(clean, clean_power, cfg.snr_list_db.front(), amplitude,
                             cfg.seed, 1000, cfg.grid_length, margin);

  std::vector<double> direct(cfg.grid_length);
  for (std::size_t n = 0; n < cfg.grid_length; ++n)
    direct[n] = realization.combined->eval(static_cast<double>(n) * kT);
  const SpectrumResult direct_spectrum = amplitude_spectrum(direct, kT);

  const InterpConfig config{clean->bandwidth(), kT, half_window, amplitude};
  const SpectrumResult crossing_spectrum =
      spectrum_from_crossings(realization.crossings, config, cfg.grid_length, kT);
  const std::vector<double> diff = spectrum_diff(direct_spectrum, crossing_spectrum);

  save_spectrum((std::filesystem::path(cfg.out_dir) / "fig8.csv").string(), direct_spectrum);
  {
    auto csv = open_csv(cfg, "fig9.csv");
    csv << "freq_hz,diff_db\n";
    for (std::size_t k = 0; k < diff.size(); ++k)
      csv << format_real(direct_spectrum.bin_freqs[k]) << ',' << format_real(diff[k]) << '\n';
  }

  const double peak_db =
      *std::max_element(direct_spectrum.amplitude_db.begin(), direct_spectrum.amplitude_db.end());
  const double max_diff = *std::max_element(diff.begin(), diff.end());
  report.checks.push_back({"fig8_peak_0db", peak_db == 0.0, peak_db, 0.0});
  report.checks.push_back({"fig9_max_diff_db", max_diff <= kFig9RegressionDb, max_diff,
                           kFig9RegressionDb});
  return report;
}

ExperimentReport run_bench(ExperimentConfig cfg) {
  ExperimentReport report{"bench", {}, {}};
  if (cfg.half_windows.empty()) cfg.half_windows = {8};
  const std::vector<std::size_t> lengths{256, 1024, 4096, 16384};
  const auto points = run_bench_sweep(cfg.seed, cfg.half_windows.front(), lengths);

  auto csv = open_csv(cfg, "bench.csv");
  csv << "N,resample_ns_per_sample,spectrum_ms\n";
  double per_sample_min = 1e300, per_sample_max = 0.0;
  double c_min = 1e300, c_max = 0.0;
  for (const auto& point : points) {
    csv << point.grid_length << ',' << format_real(point.resample_ns_per_sample) << ','
        << format_real(point.spectrum_ms) << '\n';
    per_sample_min = std::min(per_sample_min, point.resample_ns_per_sample);
    per_sample_max = std::max(per_sample_max, point.resample_ns_per_sample);
    const double n = static_cast<double>(point.grid_length);
    const double c = point.spectrum_ms * 1e6 / (n * std::log2(n));  // ns per (N log2 N)
    c_min = std::min(c_min, c);
    c_max = std::max(c_max, c);
  }
  report.checks.push_back({"resample_per_sample_flat", per_sample_max / per_sample_min <= 2.0,
                           per_sample_max / per_sample_min, 2.0});
  report.checks.push_back({"spectrum_nlogn_fit", c_max / c_min <= 2.0, c_max / c_min, 2.0});
  return report;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  std::filesystem::create_directories(config.out_dir);
  ExperimentReport report;
  if (config.experiment == "fig4") report = run_fig4(config);
  else if (config.experiment == "fig1_3") report = run_fig1_3(config);
  else if (config.experiment == "fig6") report = run_fig6(config);
  else if (config.experiment == "fig5" || config.experiment == "fig7" ||
           config.experiment == "fig5_7") report = run_fig5_fig7(config);
  else if (config.experiment == "fig8_9") report = run_fig8_fig9(config);
  else if (config.experiment == "bench") report = run_bench(config);
  else throw std::invalid_argument("unknown experiment: " + config.experiment);
  write_report_json(config, report);
  return report;
}

}  // namespace sinecross
