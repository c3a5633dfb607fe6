#ifndef PPMVT_LEVMAR_HPP
#define PPMVT_LEVMAR_HPP

#include <functional>
#include <span>
#include <vector>

namespace ppmvt {

struct CurveFitOptions {
  int max_iterations = 200;
  double ftol = 1e-8;  // relative change in RMS residual
};

struct CurveFitResult {
  std::vector<double> params;
  double rms = 0.0;  // RMS residual over the data points
  int iterations = 0;
  bool converged = false;
};

/// Damped least squares (Levenberg-Marquardt with Marquardt scaling) of
/// model(t, params) against (t[i], y[i]). The Jacobian is taken by forward
/// differences. `valid`, when given, rejects parameter vectors outside the
/// model domain; invalid trial steps are treated as uphill.
///
/// Converges when an accepted step changes the RMS residual by less than
/// ftol relative, or when damping can no longer find a downhill step.
CurveFitResult fit_curve_least_squares(
    std::span<const double> t, std::span<const double> y,
    const std::function<double(double, std::span<const double>)>& model,
    std::vector<double> initial,
    const std::function<bool(std::span<const double>)>& valid = {},
    const CurveFitOptions& options = {});

}  // namespace ppmvt

#endif
