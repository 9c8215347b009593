#include "sinecross/io.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sinecross {

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

std::string kind_name(SignalKind kind) {
  switch (kind) {
    case SignalKind::bpsk: return "bpsk";
    case SignalKind::sinc_series: return "sinc_series";
    case SignalKind::sum: return "sum";
  }
  throw std::logic_error("unknown signal kind");
}

void append_signal_json(const BandlimitedSignal& signal, std::string& out) {
  out += "{\"kind\":\"" + kind_name(signal.kind()) + "\"";
  out += ",\"B\":" + format_real(signal.bandwidth());
  out += ",\"A_s\":" + format_real(signal.sup_bound());
  out += ",\"params\":{";
  switch (signal.kind()) {
    case SignalKind::bpsk: {
      const auto& p = std::get<BpskParams>(signal.payload());
      out += "\"rolloff\":" + format_real(p.rolloff);
      out += ",\"symbol_period\":" + format_real(p.symbol_period);
      out += ",\"seed\":" + std::to_string(p.seed);
      out += ",\"scale\":" + format_real(p.scale);
      out += ",\"first_index\":" + std::to_string(p.first_index);
      out += ",\"symbols\":[";
      for (std::size_t i = 0; i < p.symbols.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.symbols[i]);
      }
      out += ']';
      break;
    }
    case SignalKind::sinc_series: {
      const auto& p = std::get<SincSeriesParams>(signal.payload());
      out += "\"rate\":" + format_real(p.rate);
      out += ",\"origin_index\":" + std::to_string(p.origin_index);
      out += ",\"coefficients\":[";
      for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
        if (i) out += ',';
        out += format_real(p.coefficients[i]);
      }
      out += ']';
      break;
    }
    case SignalKind::sum: {
      const auto& p = std::get<SumParams>(signal.payload());
      out += "\"terms\":[";
      append_signal_json(*p.lhs, out);
      out += ',';
      append_signal_json(*p.rhs, out);
      out += ']';
      break;
    }
  }
  out += "}}";
}

BandlimitedSignal signal_from_tree(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const double bandwidth = j.at("B").get<double>();
  const double sup_bound = j.at("A_s").get<double>();
  const auto& params = j.at("params");
  if (kind == "bpsk") {
    BpskParams p;
    p.rolloff = params.at("rolloff").get<double>();
    p.symbol_period = params.at("symbol_period").get<double>();
    p.seed = params.at("seed").get<std::uint64_t>();
    p.scale = params.at("scale").get<double>();
    p.first_index = params.at("first_index").get<long>();
    p.symbols = params.at("symbols").get<std::vector<int>>();
    return BandlimitedSignal(SignalKind::bpsk, bandwidth, sup_bound, std::move(p));
  }
  if (kind == "sinc_series") {
    SincSeriesParams p;
    p.rate = params.at("rate").get<double>();
    p.origin_index = params.at("origin_index").get<long>();
    p.coefficients = params.at("coefficients").get<std::vector<double>>();
    return BandlimitedSignal(SignalKind::sinc_series, bandwidth, sup_bound, std::move(p));
  }
  if (kind == "sum") {
    const auto& terms = params.at("terms");
    if (terms.size() != 2) throw std::invalid_argument("signal JSON: sum needs exactly 2 terms");
    SumParams p;
    p.lhs = std::make_shared<BandlimitedSignal>(signal_from_tree(terms[0]));
    p.rhs = std::make_shared<BandlimitedSignal>(signal_from_tree(terms[1]));
    return BandlimitedSignal(SignalKind::sum, bandwidth, sup_bound, std::move(p));
  }
  throw std::invalid_argument("signal JSON: unknown kind '" + kind + "'");
}

}  // namespace

std::string signal_to_json(const BandlimitedSignal& signal) {
  std::string out;
  append_signal_json(signal, out);
  out += '\n';
  return out;
}

BandlimitedSignal signal_from_json(const std::string& text) {
  return signal_from_tree(nlohmann::json::parse(text));
}

void save_signal(const BandlimitedSignal& signal, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << signal_to_json(signal);
}

BandlimitedSignal load_signal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return signal_from_json(buf.str());
}

void write_crossings(std::ostream& out, const CrossingSequence& crossings) {
  out << "# T=" << format_real(crossings.semi_period)
      << " A=" << format_real(crossings.amplitude)
      << " n_first=" << crossings.n_first << '\n';
  for (std::size_t i = 0; i < crossings.deltas.size(); ++i)
    out << crossings.n_first + static_cast<long>(i) << ',' << format_real(crossings.deltas[i]) << '\n';
}

CrossingSequence read_crossings(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("crossing file: missing header");
  CrossingSequence out;
  if (std::sscanf(header.c_str(), "# T=%lf A=%lf n_first=%ld",
                  &out.semi_period, &out.amplitude, &out.n_first) != 3)
    throw std::runtime_error("crossing file: malformed header: " + header);
  std::string line;
  long expected = out.n_first;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    long n = 0;
    double delta = 0.0;
    if (std::sscanf(line.c_str(), "%ld,%lf", &n, &delta) != 2)
      throw std::runtime_error("crossing file: malformed row: " + line);
    if (n != expected)
      throw std::runtime_error("crossing file: non-contiguous index " + std::to_string(n));
    out.deltas.push_back(delta);
    ++expected;
  }
  return out;
}

void save_crossings(const CrossingSequence& crossings, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_crossings(out, crossings);
}

CrossingSequence load_crossings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_crossings(in);
}

void write_samples(std::ostream& out, const std::vector<double>& instants,
                   const std::vector<double>& values) {
  if (instants.size() != values.size())
    throw std::invalid_argument("write_samples: length mismatch");
  for (std::size_t i = 0; i < values.size(); ++i)
    out << format_real(instants[i]) << ',' << format_real(values[i]) << '\n';
}

void save_samples(const std::string& path, const std::vector<double>& instants,
                  const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_samples(out, instants, values);
}

std::vector<double> load_sample_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    double t = 0.0, v = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf", &t, &v) != 2)
      throw std::runtime_error("sample file: malformed row: " + line);
    values.push_back(v);
  }
  return values;
}

void save_spectrum(const std::string& path, const SpectrumResult& spectrum) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (std::size_t k = 0; k < spectrum.bin_freqs.size(); ++k)
    out << format_real(spectrum.bin_freqs[k]) << ',' << format_real(spectrum.amplitude_db[k]) << '\n';
}

}  // namespace sinecross
