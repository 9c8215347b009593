// Command-line front end: signal generation, crossing detection,
// reconstruction, spectra and the experiment driver.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sinecross/harness.hpp"
#include "sinecross/io.hpp"

namespace {

struct GridSpec {
  double t0 = 0.0, dt = 1.0, t1 = 0.0;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec grid;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &grid.t0, &grid.dt, &grid.t1) != 3 ||
      grid.dt <= 0.0)
    throw CLI::ValidationError("--grid expects <t0>:<dt>:<t1> with dt > 0");
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"band-limited signal reconstruction from sine wave crossings"};
  app.require_subcommand(1);

  // gen-signal
  std::string gen_type = "bpsk", gen_out;
  double gen_bt = 0.7, gen_rolloff = 0.2, gen_power = 1.0, gen_span = 1023.0;
  int gen_symbols = 640;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen-signal", "synthesize a test signal (T = 1 units)");
  gen->add_option("--type", gen_type)->check(CLI::IsMember({"bpsk", "noise"}));
  gen->add_option("--bt", gen_bt, "two-sided bandwidth times the semi-period");
  gen->add_option("--symbols", gen_symbols, "BPSK symbol count");
  gen->add_option("--rolloff", gen_rolloff);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--power", gen_power, "noise mean power");
  gen->add_option("--span", gen_span, "noise interval [0, span]");
  gen->add_option("--out", gen_out)->required();

  // detect
  std::string det_signal, det_out;
  double det_amp = 1.1, det_period = 1.0;
  long det_lo = 0, det_hi = 0;
  auto* det = app.add_subcommand("detect", "find sine wave crossings");
  det->add_option("--signal", det_signal)->required()->check(CLI::ExistingFile);
  det->add_option("--amp", det_amp)->required();
  det->add_option("--semiperiod", det_period);
  det->add_option("--n-lo", det_lo)->required();
  det->add_option("--n-hi", det_hi)->required();
  det->add_option("--out", det_out)->required();

  // reconstruct
  std::string rec_crossings, rec_grid, rec_out;
  double rec_bt = 0.7;
  int rec_p = 8;
  auto* rec = app.add_subcommand("reconstruct", "interpolate the signal from crossings");
  rec->add_option("--crossings", rec_crossings)->required()->check(CLI::ExistingFile);
  rec->add_option("--bt", rec_bt);
  rec->add_option("--p", rec_p);
  rec->add_option("--grid", rec_grid, "<t0>:<dt>:<t1>")->required();
  rec->add_option("--out", rec_out)->required();

  // spectrum
  std::string spec_samples, spec_crossings, spec_out;
  double spec_spacing = 1.0, spec_bt = 0.7;
  int spec_p = 16;
  std::size_t spec_n = 1024;
  auto* spec = app.add_subcommand("spectrum", "one-sided amplitude spectrum");
  auto* opt_samples = spec->add_option("--samples", spec_samples)->check(CLI::ExistingFile);
  auto* opt_crossings = spec->add_option("--crossings", spec_crossings)->check(CLI::ExistingFile);
  spec->add_option("--spacing", spec_spacing)->required();
  spec->add_option("--p", spec_p);
  spec->add_option("--n", spec_n);
  spec->add_option("--bt", spec_bt);
  spec->add_option("--out", spec_out)->required();
  opt_samples->excludes(opt_crossings);

  // experiment
  sinecross::ExperimentConfig cfg;
  auto* exp = app.add_subcommand("experiment", "run a full experiment, emit CSVs + report.json");
  exp->add_option("experiment", cfg.experiment)
      ->required()
      ->check(CLI::IsMember({"fig4", "fig1_3", "fig6", "fig5", "fig7", "fig5_7", "fig8_9", "bench"}));
  exp->add_option("--seed", cfg.seed);
  exp->add_option("--n", cfg.grid_length);
  exp->add_option("--bt", cfg.bt);
  exp->add_option("--rolloff", cfg.rolloff);
  exp->add_option("--amps", cfg.amplitudes, "probe amplitudes");
  exp->add_option("--p-list", cfg.half_windows, "half-window sweep");
  exp->add_option("--snr-list", cfg.snr_list_db, "SNR sweep in dB");
  exp->add_option("--out", cfg.out_dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (gen_type == "bpsk") {
        const double symbol_period = (1.0 + gen_rolloff) / gen_bt;  // T = 1 units
        auto symbols = sinecross::random_symbols(static_cast<std::size_t>(gen_symbols), gen_seed);
        sinecross::save_signal(
            sinecross::make_bpsk(std::move(symbols), gen_rolloff, symbol_period, gen_seed),
            gen_out);
      } else {
        sinecross::save_signal(
            sinecross::make_bandlimited_noise(gen_bt, gen_power, {0.0, gen_span}, gen_seed),
            gen_out);
      }
    } else if (*det) {
      const auto signal = sinecross::load_signal(det_signal);
      const auto crossings =
          sinecross::detect(signal, {det_amp, det_period}, det_lo, det_hi);
      sinecross::save_crossings(crossings, det_out);
    } else if (*rec) {
      const auto crossings = sinecross::load_crossings(rec_crossings);
      const auto grid = parse_grid(rec_grid);
      const sinecross::InterpConfig config{rec_bt / crossings.semi_period,
                                           crossings.semi_period, rec_p,
                                           crossings.amplitude};
      std::vector<double> instants, values;
      for (double t = grid.t0; t <= grid.t1 + 1e-12 * grid.dt; t += grid.dt) {
        instants.push_back(t);
        values.push_back(sinecross::reconstruct_at(crossings, config, t));
      }
      sinecross::save_samples(rec_out, instants, values);
    } else if (*spec) {
      sinecross::SpectrumResult result;
      if (!spec_samples.empty()) {
        const auto samples = sinecross::load_sample_values(spec_samples);
        result = sinecross::amplitude_spectrum(samples, spec_spacing);
      } else if (!spec_crossings.empty()) {
        const auto crossings = sinecross::load_crossings(spec_crossings);
        const sinecross::InterpConfig config{spec_bt / crossings.semi_period,
                                             crossings.semi_period, spec_p,
                                             crossings.amplitude};
        result = sinecross::spectrum_from_crossings(crossings, config, spec_n, spec_spacing);
      } else {
        std::cerr << "spectrum: need --samples or --crossings\n";
        return 2;
      }
      if (result.degenerate)
        std::cerr << "spectrum: all-zero input, amplitudes written at the dB floor\n";
      sinecross::save_spectrum(spec_out, result);
    } else if (*exp) {
      const auto report = sinecross::run_experiment(cfg);
      for (const auto& check : report.checks)
        std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name
                  << " value=" << check.value << " threshold=" << check.threshold << '\n';
      if (!report.passed()) return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
