#include <cmath>

#include <boost/math/special_functions/beta.hpp>
#include <gtest/gtest.h>

#include "levytail/stats.hpp"

using namespace levytail;

TEST(Wilson, KnownInterval) {
  const Interval ci = wilson_interval(50, 100, 0.95);
  EXPECT_NEAR(ci.lo, 0.403832, 1e-5);
  EXPECT_NEAR(ci.hi, 0.596168, 1e-5);
  const Interval zero = wilson_interval(0, 1000, 0.95);
  EXPECT_EQ(zero.lo, 0.0);
  EXPECT_GT(zero.hi, 0.0);
  const Interval full = wilson_interval(1000, 1000, 0.95);
  EXPECT_EQ(full.hi, 1.0);
}

TEST(ClopperPearson, TailConditions) {
  const double alpha = 0.01;
  for (auto [k, n] : {std::pair<std::uint64_t, std::uint64_t>{3, 1000}, {500, 1000}, {1, 7}, {123456, 1000000}}) {
    const Interval ci = clopper_pearson_interval(k, n, 1.0 - alpha);
    // P(Bin(n, lo) >= k) = alpha/2 and P(Bin(n, hi) <= k) = alpha/2.
    EXPECT_NEAR(boost::math::ibeta(double(k), double(n - k + 1), ci.lo), alpha / 2, 1e-10);
    EXPECT_NEAR(boost::math::ibetac(double(k + 1), double(n - k), ci.hi), alpha / 2, 1e-10);
  }
  EXPECT_EQ(clopper_pearson_interval(0, 10, 0.95).lo, 0.0);
  EXPECT_NEAR(clopper_pearson_interval(0, 10, 0.95).hi, 1.0 - std::pow(0.025, 0.1), 1e-12);
  EXPECT_EQ(clopper_pearson_interval(10, 10, 0.95).hi, 1.0);
}

TEST(ClopperPearson, LowerLimitBelowWilson) {
  const Interval cp = clopper_pearson_interval(20, 10000, 0.99);
  const Interval w = wilson_interval(20, 10000, 0.99);
  EXPECT_LE(cp.lo, w.lo);
  EXPECT_LT(cp.lo, 0.002);
  EXPECT_GT(cp.hi, 0.002);
}

TEST(Kolmogorov, KnownValues) {
  EXPECT_NEAR(kolmogorov_q(1.0), 0.26999967, 1e-7);
  EXPECT_NEAR(kolmogorov_q(1.3581), 0.05, 1e-4);
  EXPECT_NEAR(kolmogorov_q(0.0), 1.0, 1e-15);
  EXPECT_LT(kolmogorov_q(5.0), 1e-20);
}

TEST(KsTwoSample, Extremes) {
  std::vector<double> a, b, c;
  for (int i = 0; i < 200; ++i) {
    a.push_back(i);
    b.push_back(i);
    c.push_back(1000 + i);
  }
  const KsResult same = ks_two_sample(a, b);
  EXPECT_EQ(same.statistic, 0.0);
  EXPECT_NEAR(same.p_value, 1.0, 1e-12);
  const KsResult apart = ks_two_sample(a, c);
  EXPECT_EQ(apart.statistic, 1.0);
  EXPECT_LT(apart.p_value, 1e-10);
}

TEST(LeastSquares, ExactLine) {
  const LineFit f = least_squares({1, 2, 3, 4}, {3, 5, 7, 9});
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_NEAR(f.r2, 1.0, 1e-14);
}
