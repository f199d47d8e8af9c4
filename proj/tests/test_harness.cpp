#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "levytail/closed_forms.hpp"
#include "levytail/errors.hpp"
#include "levytail/harness.hpp"

using namespace levytail;

namespace {

constexpr double kPi = std::numbers::pi;

ResidualCurve synthetic(double c, double p) {
  ResidualCurve curve;
  for (double t : log_grid(1e-4, 1e-2, 9)) {
    CurvePoint pt;
    pt.t = t;
    pt.residual = c * std::pow(t, p);
    curve.points.push_back(pt);
  }
  return curve;
}

}  // namespace

TEST(Grid, LogGrid) {
  const auto g = log_grid(1e-4, 1e-2, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.front(), 1e-4);
  EXPECT_DOUBLE_EQ(g.back(), 1e-2);
  EXPECT_NEAR(g[2], 1e-3, 1e-15);
  EXPECT_EQ(default_t_grid(1e-4, 1e-2).size(), 25u);
  EXPECT_THROW(log_grid(0.0, 1.0, 3), LevyError);
}

TEST(FitRate, SyntheticPowers) {
  const RateFit two = fit_rate(synthetic(3.0, 2.0));
  EXPECT_NEAR(two.slope, 2.0, 1e-12);
  EXPECT_NEAR(two.r2, 1.0, 1e-12);
  EXPECT_EQ(two.points_used, 9);
  EXPECT_NEAR(fit_rate(synthetic(0.5, 5.0 / 3.0)).slope, 5.0 / 3.0, 1e-12);
}

TEST(FitRate, TooFewPoints) {
  ResidualCurve c = synthetic(1.0, 2.0);
  c.points.resize(2);
  try {
    (void)fit_rate(c);
    FAIL();
  } catch (const LevyError& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooFewPoints);
  }
}

TEST(ResidualCurve, CauchyClosedForm) {
  const auto grid = default_t_grid(1e-4, 1e-2);
  const auto curve = residual_curve(make_cauchy(), 1.0, grid, {});
  ASSERT_EQ(curve.points.size(), grid.size());
  EXPECT_NEAR(curve.lambda_eps, 2.0 / kPi, 1e-15);
  for (const auto& p : curve.points) {
    const double want = 2.0 / kPi * std::abs(std::atan(p.t) - p.t);
    EXPECT_NEAR(p.residual, want, 1e-12 * want + 1e-18);
    ASSERT_TRUE(p.bound);
    EXPECT_GE(p.bound->value, p.residual);
  }
  EXPECT_NEAR(fit_rate(curve).slope, 3.0, 0.05);
}

TEST(ResidualCurve, VanishingIntensity) {
  const auto m = make_cpp(1.5, uniform_jump(0.1, 0.4));
  const auto curve = residual_curve(m, 1.0, {0.1, 0.5, 1.0}, {});
  EXPECT_EQ(curve.lambda_eps, 0.0);
  for (const auto& p : curve.points) EXPECT_EQ(p.residual, p.truth);
}

TEST(ResidualCurve, ClosedFormNeedsIncrementQuantity) {
  try {
    (void)residual_curve(make_cauchy(), 1.0, {1e-3}, {}, Quantity::small_jumps);
    FAIL();
  } catch (const LevyError& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruthUnavailable);
  }
  try {
    (void)residual_curve(make_power_law(1.0, 0.5, 2.0), 0.5, {1e-3}, {});
    FAIL();
  } catch (const LevyError& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruthUnavailable);
  }
}

TEST(ResidualCurve, MonteCarloBracketsClosedForm) {
  TruthSpec mc;
  mc.kind = TruthKind::mc;
  mc.n = 100000;
  mc.confidence = 0.999;
  const std::vector<double> grid{0.05, 0.2, 0.5};
  const auto exact = residual_curve(make_cauchy(), 1.0, grid, {});
  const auto sim = residual_curve(make_cauchy(), 1.0, grid, mc);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& p = sim.points[i];
    ASSERT_TRUE(p.truth_ci);
    EXPECT_LE(p.truth_ci->lo, exact.points[i].truth);
    EXPECT_GE(p.truth_ci->hi, exact.points[i].truth);
    EXPECT_LE(p.residual_lo, exact.points[i].residual);
  }
}

TEST(ResidualCurve, ComposedSamplerCertifiesBias) {
  TruthSpec mc;
  mc.kind = TruthKind::mc;
  mc.n = 20000;
  const auto curve = residual_curve(make_power_law(1.0, 1.5, 2.0), 0.5, {1e-3}, mc, Quantity::increment,
                                    Theorem::lambda2bis);
  const auto& p = curve.points.front();
  EXPECT_TRUE(p.certified);
  EXPECT_GT(p.delta, 0.0);
  EXPECT_GT(p.margin, 0.0);
  EXPECT_LT(p.margin, 0.5);
  EXPECT_LE(p.bias, 1e-7);
  ASSERT_TRUE(p.estimate);
  EXPECT_EQ(p.estimate->n, 20000u);
}

TEST(Validate, CauchyLambda2bisPasses) {
  ValidateConfig cfg;
  cfg.eps_grid = {0.5, 1.0, 2.0};
  cfg.checks = {{Theorem::lambda2bis, std::nullopt}};
  const auto rep = validate_bounds(make_cauchy(), cfg);
  EXPECT_EQ(rep.fails, 0);
  EXPECT_EQ(rep.passes, 36);
  EXPECT_TRUE(rep.ok());
  for (const auto& r : rep.rows) EXPECT_GE(r.margin, 0.0);
}

TEST(Validate, InapplicableTheoremIsSkipped) {
  ValidateConfig cfg;
  cfg.eps_grid = {1.0};
  cfg.t_grid = {1e-3};
  cfg.checks = {{Theorem::lambda2, std::nullopt}, {Theorem::lambda2, 128.0 / (27.0 * kPi)}};
  const auto rep = validate_bounds(make_cauchy(), cfg);
  EXPECT_EQ(rep.skipped, 1);
  EXPECT_EQ(rep.passes, 1);
  EXPECT_NE(rep.rows.front().note.find("CertTooWeak"), std::string::npos);
}

TEST(Validate, QuantityPerTheorem) {
  EXPECT_EQ(quantity_of(Theorem::ps1), Quantity::small_jumps_drift);
  EXPECT_EQ(quantity_of(Theorem::ps2), Quantity::small_jumps);
  EXPECT_EQ(quantity_of(Theorem::markov), Quantity::small_jumps);
  EXPECT_EQ(quantity_of(Theorem::teo1), Quantity::increment);
  EXPECT_EQ(quantity_of(Theorem::lambda2bis), Quantity::increment);
}

TEST(Discontinuous, Construction) {
  const double a = 1.5, eps = 1.0, c = 0.05, h = 0.145;
  const auto m = discontinuous_example(a, eps, c, h);
  EXPECT_NEAR(m.density(eps) - m.density(std::nextafter(eps, 0.0)), h, 1e-9);
  EXPECT_TRUE(m.symmetric);
  EXPECT_FALSE(m.lipschitz_cert);
  EXPECT_NEAR(m.class_M, c + h * std::pow(2.0, 1.0 + a), 1e-14);
  EXPECT_TRUE(verify_class_membership(m, 2000).pass);
  for (double x : {0.3, 1.0, 1.5, 2.5}) {
    EXPECT_NEAR(lambda(m, x).value, lambda(m, x, Method::quadrature).value, 1e-8 * lambda(m, x).value + 1e-14);
  }
  EXPECT_THROW(discontinuous_example(0.5, 1.0, 1.0, 1.0), LevyError);
}

TEST(Output, NumbersAndCsv) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-kInf), "-inf");
  const auto curve = residual_curve(make_cauchy(), 1.0, {1e-3, 1e-2}, {});
  const std::string csv = curve_csv(curve);
  EXPECT_EQ(csv.rfind("model,eps,t,truth,", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  const std::string js = rate_json(curve, fit_rate(synthetic(1.0, 2.0)));
  EXPECT_NE(js.find("\"slope\""), std::string::npos);
}

TEST(Output, EstimateJsonIsShardFree) {
  MCEstimate e;
  e.shards = 16;
  e.n = 10;
  const std::string js = estimate_json(e);
  EXPECT_EQ(js.find("shards"), std::string::npos);
  EXPECT_NE(js.find("\"p_hat\""), std::string::npos);
}
