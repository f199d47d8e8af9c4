#include "levytail/samplers.hpp"

#include <cmath>
#include <numbers>

namespace levytail {

constexpr double kPi = std::numbers::pi;

double draw_exponential(CounterRng& rng) { return -std::log(rng.uniform()); }

double draw_normal(CounterRng& rng) {
  const double u1 = rng.uniform(), u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

std::uint64_t draw_poisson(double mean, CounterRng& rng) {
  if (!(mean > 0.0)) return 0;
  if (mean < 30.0) {
    // Sequential inversion.
    const double u = rng.uniform();
    double p = std::exp(-mean), cdf = p;
    std::uint64_t k = 0;
    while (u > cdf && k < 1000) {
      ++k;
      p *= mean / static_cast<double>(k);
      cdf += p;
    }
    return k;
  }
  // PTRS transformed rejection (Hormann 1993).
  const double smu = std::sqrt(mean);
  const double b = 0.931 + 2.53 * smu;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  const double lmu = std::log(mean);
  for (;;) {
    const double U = rng.uniform() - 0.5;
    const double V = rng.uniform();
    const double us = 0.5 - std::abs(U);
    const double kd = std::floor((2.0 * a / us + b) * U + mean + 0.43);
    if (us >= 0.07 && V <= vr) return static_cast<std::uint64_t>(kd);
    if (kd < 0.0 || (us < 0.013 && V > us)) continue;
    if (std::log(V) + std::log(inv_alpha) - std::log(a / (us * us) + b) <= -mean + kd * lmu - std::lgamma(kd + 1.0)) {
      return static_cast<std::uint64_t>(kd);
    }
  }
}

double draw_gamma(double shape, CounterRng& rng) {
  if (shape < 1.0) {
    const double g = draw_gamma(shape + 1.0, rng);
    return std::exp(std::log(g) + std::log(rng.uniform()) / shape);
  }
  // Marsaglia-Tsang.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = draw_normal(rng);
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = rng.uniform();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
  }
}

double draw_cauchy(double scale, CounterRng& rng) { return scale * std::tan(kPi * (rng.uniform() - 0.5)); }

double draw_inverse_gaussian(double mu, double shape, CounterRng& rng) {
  // Michael-Schucany-Haas, smaller root written without cancellation.
  const double nu = draw_normal(rng);
  const double phi = mu * nu * nu / (2.0 * shape);
  const double x = mu / (1.0 + phi + std::sqrt(phi * phi + 2.0 * phi));
  return rng.uniform() <= mu / (mu + x) ? x : mu * mu / x;
}

double draw_symmetric_stable(double alpha, double scale, CounterRng& rng) {
  const double V = kPi * (rng.uniform() - 0.5);
  if (alpha == 1.0) return scale * std::tan(V);
  const double W = draw_exponential(rng);
  const double x = std::sin(alpha * V) / std::pow(std::cos(V), 1.0 / alpha) *
                   std::pow(std::cos((1.0 - alpha) * V) / W, (1.0 - alpha) / alpha);
  return scale * x;
}

double stable_scale_from_density(double alpha, double c) {
  if (alpha == 1.0) return c * kPi;
  const double k = std::tgamma(1.0 - alpha) * std::cos(kPi * alpha / 2.0) / alpha;
  return std::pow(2.0 * c * k, 1.0 / alpha);
}

}  // namespace levytail
