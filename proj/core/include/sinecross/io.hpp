#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sinecross/crossings.hpp"
#include "sinecross/signal.hpp"
#include "sinecross/spectrum.hpp"

namespace sinecross {

// All reals are printed with 17 significant digits so files round-trip
// bit-exactly.

std::string format_real(double value);

/// Signal descriptor JSON: {"kind": ..., "B": ..., "A_s": ..., "params": {...}}.
std::string signal_to_json(const BandlimitedSignal& signal);
BandlimitedSignal signal_from_json(const std::string& text);

void save_signal(const BandlimitedSignal& signal, const std::string& path);
BandlimitedSignal load_signal(const std::string& path);

/// Crossing file: "# T=... A=... n_first=..." header, then "n,delta_n" rows.
void write_crossings(std::ostream& out, const CrossingSequence& crossings);
CrossingSequence read_crossings(std::istream& in);

void save_crossings(const CrossingSequence& crossings, const std::string& path);
CrossingSequence load_crossings(const std::string& path);

/// Sample CSV rows "t,value".
void write_samples(std::ostream& out, const std::vector<double>& instants,
                   const std::vector<double>& values);
void save_samples(const std::string& path, const std::vector<double>& instants,
                  const std::vector<double>& values);
/// Reads the value column of a "t,value" CSV (comment lines start with '#').
std::vector<double> load_sample_values(const std::string& path);

/// Spectrum CSV rows "freq_hz,amplitude_db".
void save_spectrum(const std::string& path, const SpectrumResult& spectrum);

}  // namespace sinecross
