#pragma once

#include <cstdint>

#include "levytail/rng.hpp"

namespace levytail {

double draw_exponential(CounterRng& rng);
double draw_normal(CounterRng& rng);
std::uint64_t draw_poisson(double mean, CounterRng& rng);
double draw_gamma(double shape, CounterRng& rng);
double draw_cauchy(double scale, CounterRng& rng);
// Inverse Gaussian with mean mu and shape lambda.
double draw_inverse_gaussian(double mu, double shape, CounterRng& rng);
// Symmetric alpha-stable with E exp(iuX) = exp(-|scale u|^alpha).
double draw_symmetric_stable(double alpha, double scale, CounterRng& rng);
// Scale of the symmetric stable law whose Levy density is c|x|^{-1-alpha}, at t = 1.
double stable_scale_from_density(double alpha, double c);

}  // namespace levytail
