#pragma once

#include <functional>
#include <vector>

namespace levytail {

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 4000;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

// Globally adaptive 7/15-point Gauss-Kronrod on [a, b].
// Stops when the summed error estimate is below max(rel_tol*|I|, abs_tol).
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts = {});

// Integral over [lo, hi] with 0 < lo < hi, computed in u = log(x).
// Power-law behaviour x^p becomes exponential in u and is resolved evenly
// across decades.
QuadResult integrate_log(const Integrand& f, double lo, double hi, const QuadOptions& opts = {});

// Integral over [lo, hi] split at the given interior points (ignored if outside).
QuadResult integrate_log_split(const Integrand& f, double lo, double hi,
                               const std::vector<double>& breaks, const QuadOptions& opts = {});

}  // namespace levytail
