#include "ppmvt/sampler.hpp"

#include <cmath>
#include <stdexcept>

#include "ppmvt/errors.hpp"

namespace ppmvt {

ThresholdSet::ThresholdSet(std::vector<double> levels) : levels_(std::move(levels)) {
  if (levels_.empty() || levels_.size() > 4)
    throw std::invalid_argument("ThresholdSet: need 1 to 4 levels");
  double prev = 0.0;
  for (double v : levels_) {
    if (!std::isfinite(v) || v <= prev)
      throw std::invalid_argument("ThresholdSet: levels must be finite, positive and strictly ascending");
    prev = v;
  }
}

namespace {

struct EdgeTimes {
  std::vector<double> rises;
  std::vector<double> falls;
};

EdgeTimes scan_crossings(const Waveform& w, double level) {
  EdgeTimes out;
  const auto& s = w.samples;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double a = s[i] - w.baseline;
    const double b = s[i + 1] - w.baseline;
    if (a < level && b >= level) {
      const double frac = (level - a) / (b - a);
      out.rises.push_back((static_cast<double>(i) + frac) * w.dt);
    } else if (a >= level && b < level) {
      const double frac = (a - level) / (a - b);
      out.falls.push_back((static_cast<double>(i) + frac) * w.dt);
    }
  }
  return out;
}

double mean(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

std::string mv(double level) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g mV", level);
  return buf;
}

}  // namespace

DigitizedPulse mvt_sample(const Waveform& w, const ThresholdSet& th) {
  w.validate();
  DigitizedPulse dp;
  dp.source_id = w.id;
  dp.crossings.reserve(th.size());
  for (double level : th.levels()) {
    EdgeTimes edges = scan_crossings(w, level);
    if (edges.rises.empty())
      throw RejectedPulse(w.id, "never reaches " + mv(level));
    if (edges.falls.empty())
      throw RejectedPulse(w.id, "no falling crossing at " + mv(level));
    CrossingPair pair{level, mean(edges.rises), mean(edges.falls)};
    if (pair.t_rise > pair.t_fall)
      throw RejectedPulse(w.id, "inverted crossings at " + mv(level));
    if (!dp.crossings.empty()) {
      // LED-style ordering on a unimodal pulse: higher levels rise later
      // and fall earlier.
      const CrossingPair& prev = dp.crossings.back();
      if (pair.t_rise < prev.t_rise || pair.t_fall > prev.t_fall)
        throw RejectedPulse(w.id, "crossing times not ordered with levels at " + mv(level));
    }
    dp.crossings.push_back(pair);
  }
  return dp;
}

PeakPoint pick_peak(const Waveform& w, const ThresholdSet& th) {
  w.validate();
  std::size_t best = 0;
  double vmax = w.samples[0] - w.baseline;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const double v = w.samples[i] - w.baseline;
    if (v > vmax) {  // ties break to the earliest index
      vmax = v;
      best = i;
    }
  }
  EdgeTimes first = scan_crossings(w, th.lowest());
  if (first.rises.empty())
    throw RejectedPulse(w.id, "never crosses lowest threshold " + mv(th.lowest()));
  PeakPoint peak;
  peak.t9 = w.time_at(best);
  peak.v9 = vmax;
  peak.dt_from_first = peak.t9 - mean(first.rises);
  return peak;
}

DigitizedPulse digitize(const Waveform& w, const ThresholdSet& th, bool with_peak) {
  DigitizedPulse dp = mvt_sample(w, th);
  if (with_peak) dp.peak = pick_peak(w, th);
  return dp;
}

DigitizedBatch digitize_batch(std::span<const Waveform> pulses, const ThresholdSet& th,
                              bool with_peak) {
  DigitizedBatch batch;
  batch.accepted.reserve(pulses.size());
  for (const Waveform& w : pulses) {
    try {
      batch.accepted.push_back(digitize(w, th, with_peak));
    } catch (const RejectedPulse& r) {
      batch.rejected.push_back({r.pulse_id(), r.reason()});
    }
  }
  return batch;
}

nlohmann::json to_json(const DigitizedPulse& dp) {
  nlohmann::json j;
  j["id"] = dp.source_id;
  auto& crossings = j["crossings"];
  crossings = nlohmann::json::array();
  for (const CrossingPair& c : dp.crossings) {
    crossings.push_back({{"level", c.level}, {"t_rise", c.t_rise}, {"t_fall", c.t_fall}});
  }
  if (dp.peak) {
    j["peak"] = {{"t9", dp.peak->t9},
                 {"v9", dp.peak->v9},
                 {"dt_from_first", dp.peak->dt_from_first}};
  }
  return j;
}

}  // namespace ppmvt
