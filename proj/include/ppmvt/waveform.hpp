#ifndef PPMVT_WAVEFORM_HPP
#define PPMVT_WAVEFORM_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ppmvt {

/// Uniformly sampled voltage trace, the raw input to everything else.
/// Voltages are in mV, the sample interval in ns. Immutable by convention
/// once built; all operations on it are pure.
struct Waveform {
  int id = 0;
  double dt = 1.0;               // ns, > 0
  std::vector<double> samples;   // mV
  double baseline = 0.0;         // mV, subtracted by consumers

  std::size_t size() const { return samples.size(); }
  double time_at(std::size_t i) const { return static_cast<double>(i) * dt; }

  /// Throws Error if the trace violates its invariants
  /// (>= 8 finite samples, positive finite dt).
  void validate() const;
};

/// Parameters of the bi-exponential pulse generator.
struct PulseParams {
  double amplitude_scale = 100.0;  // mV
  double onset = 0.0;              // ns
  double tau_rise = 5.0;           // ns, > 0
  double tau_decay = 40.0;         // ns, > tau_rise
  double noise_sigma = 0.0;        // mV, >= 0
  std::uint64_t seed = 0;
};

/// Synthesize S*(exp(-(t-onset)/tau_decay) - exp(-(t-onset)/tau_rise))
/// sampled at dt with n samples, plus seeded Gaussian noise.
/// Same params + same seed give bit-identical traces.
Waveform synth_biexp(const PulseParams& params, double dt, std::size_t n);

/// Trapezoidal area of (samples - baseline) over the full trace, in mV*ns.
/// This is the reference ("OSC") energy.
double integrate(const Waveform& w);

/// A set of pulses sharing one sample interval, as stored on disk.
struct PulseBundle {
  double dt = 1.0;
  std::vector<Waveform> pulses;
};

/// Bundle text format: line 1 "dt_ns=<decimal>", then one line per pulse
/// "<id>,<v0>,<v1>,...". Values are written with 17 significant digits so
/// the save->load round trip is exact. Baselines are not stored; loaded
/// pulses have baseline 0.
PulseBundle load_bundle(const std::string& path);
void save_bundle(const PulseBundle& bundle, const std::string& path);

}  // namespace ppmvt

#endif
