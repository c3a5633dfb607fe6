#ifndef PPMVT_ERRORS_HPP
#define PPMVT_ERRORS_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace ppmvt {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Pulse failed a sampling validity rule (noise filter).
class RejectedPulse : public Error {
 public:
  RejectedPulse(int pulse_id, const std::string& reason)
      : Error("pulse " + std::to_string(pulse_id) + " rejected: " + reason),
        pulse_id_(pulse_id),
        reason_(reason) {}
  int pulse_id() const { return pulse_id_; }
  const std::string& reason() const { return reason_; }

 private:
  int pulse_id_;
  std::string reason_;
};

/// Curve fit failed; carries the best RMS residual seen (NaN if none).
class FitError : public Error {
 public:
  explicit FitError(const std::string& what,
                    double best_residual = std::numeric_limits<double>::quiet_NaN())
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

/// Analytic energy could not be computed from a fitted pulse.
class EnergyError : public Error {
 public:
  using Error::Error;
};

/// Peak voltage outside the coverage of a selection plan.
class SelectionError : public Error {
 public:
  using Error::Error;
};

/// A selection plan could not be derived from a deviation table.
class PlanError : public Error {
 public:
  using Error::Error;
};

/// Value outside the domain of the SiPM response curve.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

/// A run produced no usable output (e.g. every pulse rejected).
class EmptyResultError : public Error {
 public:
  using Error::Error;
};

}  // namespace ppmvt

#endif
