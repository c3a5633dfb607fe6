#include "ppmvt/waveform.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ppmvt/errors.hpp"
#include "ppmvt/io.hpp"
#include "ppmvt/rng.hpp"

namespace ppmvt {

void Waveform::validate() const {
  if (samples.size() < 8)
    throw Error("waveform " + std::to_string(id) + ": fewer than 8 samples");
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw Error("waveform " + std::to_string(id) + ": dt must be positive and finite");
  for (double v : samples)
    if (!std::isfinite(v))
      throw Error("waveform " + std::to_string(id) + ": non-finite sample");
}

Waveform synth_biexp(const PulseParams& p, double dt, std::size_t n) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("synth_biexp: dt must be positive and finite");
  if (n < 8) throw std::invalid_argument("synth_biexp: need at least 8 samples");
  if (!(p.tau_rise > 0.0) || !(p.tau_decay > p.tau_rise))
    throw std::invalid_argument("synth_biexp: requires tau_decay > tau_rise > 0");
  if (p.noise_sigma < 0.0)
    throw std::invalid_argument("synth_biexp: noise_sigma must be >= 0");

  Waveform w;
  w.dt = dt;
  w.samples.resize(n);
  RandomStream rng(p.seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * dt;
    double v = 0.0;
    if (t >= p.onset) {
      const double x = t - p.onset;
      v = p.amplitude_scale * (std::exp(-x / p.tau_decay) - std::exp(-x / p.tau_rise));
    }
    if (p.noise_sigma > 0.0) v += p.noise_sigma * rng.gaussian();
    w.samples[i] = v;
  }
  return w;
}

double integrate(const Waveform& w) {
  w.validate();
  double sum = 0.0;
  for (double v : w.samples) sum += v - w.baseline;
  const double first = w.samples.front() - w.baseline;
  const double last = w.samples.back() - w.baseline;
  return w.dt * (sum - 0.5 * (first + last));
}

namespace {

double parse_double(std::string_view field, std::size_t line, const char* what) {
  double out;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, std::string(what) + " is not a number: '" + std::string(field) + "'");
  return out;
}

}  // namespace

PulseBundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open bundle file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  constexpr std::string_view kHeader = "dt_ns=";
  if (line.rfind(kHeader, 0) != 0)
    throw ParseError(1, "header must start with 'dt_ns='");

  PulseBundle bundle;
  bundle.dt = parse_double(std::string_view(line).substr(kHeader.size()), 1, "dt_ns");
  if (!(bundle.dt > 0.0) || !std::isfinite(bundle.dt))
    throw ParseError(1, "dt_ns must be positive and finite");

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    Waveform w;
    w.dt = bundle.dt;
    std::size_t pos = 0;
    std::size_t field_index = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) comma = line.size();
      std::string_view field(line.data() + pos, comma - pos);
      if (field.empty())
        throw ParseError(lineno, "empty field " + std::to_string(field_index));
      if (field_index == 0) {
        long long id;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), id);
        if (ec != std::errc{} || ptr != field.data() + field.size())
          throw ParseError(lineno, "pulse id is not an integer: '" + std::string(field) + "'");
        w.id = static_cast<int>(id);
      } else {
        w.samples.push_back(parse_double(field, lineno, "sample"));
      }
      ++field_index;
      pos = comma + 1;
      if (comma == line.size()) break;
    }
    if (w.samples.size() < 8)
      throw ParseError(lineno, "row has " + std::to_string(w.samples.size()) +
                                   " samples, need at least 8");
    bundle.pulses.push_back(std::move(w));
  }
  return bundle;
}

void save_bundle(const PulseBundle& bundle, const std::string& path) {
  if (!(bundle.dt > 0.0) || !std::isfinite(bundle.dt))
    throw std::invalid_argument("save_bundle: dt must be positive and finite");
  for (const Waveform& w : bundle.pulses) {
    w.validate();
    if (w.dt != bundle.dt)
      throw std::invalid_argument("save_bundle: pulse " + std::to_string(w.id) +
                                  " has dt different from the bundle dt");
  }

  std::string out;
  out.reserve(64 + bundle.pulses.size() * 16 *
                       (bundle.pulses.empty() ? 0 : bundle.pulses.front().size()));
  out += "dt_ns=";
  out += format_g17(bundle.dt);
  out += '\n';
  for (const Waveform& w : bundle.pulses) {
    out += std::to_string(w.id);
    for (double v : w.samples) {
      out += ',';
      out += format_g17(v);
    }
    out += '\n';
  }
  atomic_write_file(path, out);
}

}  // namespace ppmvt
