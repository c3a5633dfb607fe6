#include "ppmvt/levmar.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ppmvt {

namespace {

// Solve A x = b in place for a small symmetric positive-ish system by
// Gaussian elimination with partial pivoting. Returns false if singular.
bool solve_small(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::fabs(a[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::fabs(a[r * n + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best <= 0.0 || !std::isfinite(best)) return false;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
      std::swap(b[col], b[pivot]);
    }
    const double diag = a[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / diag;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t ri = n; ri-- > 0;) {
    double sum = b[ri];
    for (std::size_t c = ri + 1; c < n; ++c) sum -= a[ri * n + c] * b[c];
    b[ri] = sum / a[ri * n + ri];
  }
  return true;
}

}  // namespace

CurveFitResult fit_curve_least_squares(
    std::span<const double> t, std::span<const double> y,
    const std::function<double(double, std::span<const double>)>& model,
    std::vector<double> initial,
    const std::function<bool(std::span<const double>)>& valid,
    const CurveFitOptions& options) {
  if (t.size() != y.size()) throw std::invalid_argument("fit: t/y size mismatch");
  const std::size_t m = t.size();
  const std::size_t n = initial.size();
  if (m < n) throw std::invalid_argument("fit: fewer points than parameters");
  if (valid && !valid(initial)) throw std::invalid_argument("fit: invalid initial parameters");

  auto cost_of = [&](std::span<const double> p, std::vector<double>& r) {
    double cost = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      r[i] = model(t[i], p) - y[i];
      cost += r[i] * r[i];
    }
    return cost;
  };

  std::vector<double> p = std::move(initial);
  std::vector<double> r(m), r_try(m);
  double cost = cost_of(p, r);
  if (!std::isfinite(cost)) throw std::invalid_argument("fit: initial residual not finite");

  CurveFitResult result;
  const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  std::vector<double> jac(m * n), jtj(n * n), a(n * n), g(n), step(n), p_try(n);
  double lambda = 1e-3;

  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    // Forward-difference Jacobian at the current point.
    for (std::size_t j = 0; j < n; ++j) {
      double h = sqrt_eps * std::max(std::fabs(p[j]), sqrt_eps);
      p_try = p;
      p_try[j] += h;
      if (valid && !valid(p_try)) {
        h = -h;
        p_try[j] = p[j] + h;
      }
      for (std::size_t i = 0; i < m; ++i)
        jac[i * n + j] = (model(t[i], p_try) - (r[i] + y[i])) / h;
    }
    for (std::size_t j = 0; j < n; ++j) {
      g[j] = 0.0;
      for (std::size_t i = 0; i < m; ++i) g[j] += jac[i * n + j] * r[i];
      for (std::size_t k = j; k < n; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += jac[i * n + j] * jac[i * n + k];
        jtj[j * n + k] = jtj[k * n + j] = s;
      }
    }

    bool stepped = false;
    while (lambda < 1e15) {
      a = jtj;
      for (std::size_t j = 0; j < n; ++j) {
        const double d = std::max(jtj[j * n + j], 1e-300);
        a[j * n + j] = jtj[j * n + j] + lambda * d;
      }
      step = g;
      if (solve_small(a, step, n)) {
        bool finite = true;
        for (std::size_t j = 0; j < n; ++j) {
          p_try[j] = p[j] - step[j];
          finite = finite && std::isfinite(p_try[j]);
        }
        if (finite && (!valid || valid(p_try))) {
          const double cost_try = cost_of(p_try, r_try);
          if (std::isfinite(cost_try) && cost_try <= cost) {
            const double rel = (cost - cost_try) / std::max(cost, 1e-300);
            p = p_try;
            std::swap(r, r_try);
            cost = cost_try;
            lambda = std::max(lambda / 9.0, 1e-12);
            stepped = true;
            // cost ~ rms^2, so halve the tolerance exponent
            if (rel < 2.0 * options.ftol) result.converged = true;
            break;
          }
        }
      }
      lambda *= 11.0;
    }
    if (!stepped) {
      // Damping exhausted: no downhill step exists at this point, treat as
      // converged at the local minimum.
      result.converged = true;
      ++iter;
      break;
    }
    if (result.converged) {
      ++iter;
      break;
    }
  }

  result.params = std::move(p);
  result.rms = std::sqrt(cost / static_cast<double>(m));
  result.iterations = iter;
  return result;
}

}  // namespace ppmvt
