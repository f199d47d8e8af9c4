#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace levytail {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

Interval wilson_interval(std::uint64_t k, std::uint64_t n, double confidence);
Interval clopper_pearson_interval(std::uint64_t k, std::uint64_t n, double confidence);

// Asymptotic Kolmogorov survival function Q(lambda) = 2 sum (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace levytail
