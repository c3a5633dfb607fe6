#ifndef PPMVT_SAMPLER_HPP
#define PPMVT_SAMPLER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppmvt/waveform.hpp"

namespace ppmvt {

/// 1-4 fixed voltage thresholds, strictly ascending, all > 0 mV.
class ThresholdSet {
 public:
  explicit ThresholdSet(std::vector<double> levels);

  const std::vector<double>& levels() const { return levels_; }
  double lowest() const { return levels_.front(); }
  double highest() const { return levels_.back(); }
  std::size_t size() const { return levels_.size(); }

 private:
  std::vector<double> levels_;
};

/// Crossing times of one threshold level on both pulse edges. When the
/// noisy trace crosses a level several times per edge, the times are the
/// average over that edge's crossings.
struct CrossingPair {
  double level;   // mV
  double t_rise;  // ns
  double t_fall;  // ns
};

/// The pulse maximum, held as an extra sampling point.
struct PeakPoint {
  double t9;             // ns
  double v9;             // mV above baseline
  double dt_from_first;  // t9 minus the lowest threshold's rise time
};

/// One pulse reduced to its threshold crossing times plus optionally the
/// peak point. Crossings are ordered by ascending level.
struct DigitizedPulse {
  int source_id = 0;
  std::vector<CrossingPair> crossings;
  std::optional<PeakPoint> peak;
};

struct Rejection {
  int pulse_id;
  std::string reason;
};

struct DigitizedBatch {
  std::vector<DigitizedPulse> accepted;
  std::vector<Rejection> rejected;
};

/// Threshold sampling on both edges. Crossing times are located by linear
/// interpolation between the bracketing samples. Throws RejectedPulse when
/// the pulse does not cross every configured level on both edges, or when
/// the crossing times are not ordered consistently with the levels.
DigitizedPulse mvt_sample(const Waveform& w, const ThresholdSet& th);

/// Time and value of the maximum sample (earliest index on ties), plus the
/// interval from the lowest threshold's rise time. Throws RejectedPulse if
/// the pulse never crosses the lowest threshold.
PeakPoint pick_peak(const Waveform& w, const ThresholdSet& th);

/// mvt_sample plus, when with_peak is set, pick_peak.
DigitizedPulse digitize(const Waveform& w, const ThresholdSet& th, bool with_peak);

/// Apply digitize to many pulses, collecting rejections instead of throwing.
DigitizedBatch digitize_batch(std::span<const Waveform> pulses, const ThresholdSet& th,
                              bool with_peak);

/// One JSON-lines entry per pulse: id, per-level rise/fall times, optional peak.
nlohmann::json to_json(const DigitizedPulse& dp);

}  // namespace ppmvt

#endif
