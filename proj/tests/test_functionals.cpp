#include <cmath>
#include <numbers>

#include <boost/math/special_functions/expint.hpp>
#include <gtest/gtest.h>

#include "levytail/errors.hpp"
#include "levytail/levy_model.hpp"

using namespace levytail;

namespace {

constexpr double kPi = std::numbers::pi;

// f = 1 on [-1, 1].
LevyModel box_model(double M) {
  LevyModel m;
  m.name = "box";
  m.density = [](double x) { return std::abs(x) <= 1.0 && x != 0.0 ? 1.0 : 0.0; };
  m.symmetric = true;
  m.variation = Variation::finite;
  m.class_alpha = 0.5;
  m.class_M = M;
  m.global_M = 1.0;
  m.support_pos = m.support_neg = 1.0;
  m.breakpoints = {1.0};
  return m;
}

// f = x^{-2} on (0, 1].
LevyModel one_sided_cauchy_like() {
  LevyModel m;
  m.name = "inv_square";
  m.density = [](double x) { return x > 0.0 && x <= 1.0 ? 1.0 / (x * x) : 0.0; };
  m.symmetric = false;
  m.variation = Variation::infinite;
  m.class_alpha = 1.0;
  m.class_M = 1.0;
  m.support_pos = 1.0;
  m.support_neg = 0.0;
  m.breakpoints = {1.0};
  return m;
}

std::vector<double> log_points(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo * std::pow(hi / lo, i / double(n - 1)));
  return v;
}

void expect_rel(double got, double want, double tol) {
  if (want == 0.0) EXPECT_NEAR(got, 0.0, tol);
  else EXPECT_LE(std::abs(got - want), tol * std::abs(want)) << got << " vs " << want;
}

}  // namespace

TEST(Lambda, CauchyAndPowerLaw) {
  EXPECT_NEAR(lambda(make_cauchy(), 2.0).value, 1.0 / kPi, 1e-14);
  EXPECT_NEAR(lambda(make_cauchy(), 2.0, Method::quadrature).value, 1.0 / kPi, 1e-10);
  const auto pl = make_power_law(1.0, 0.5, 2.0);
  EXPECT_NEAR(lambda(pl, 0.5).value, 4.0 * (std::sqrt(2.0) - 1.0 / std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(lambda(pl, 0.5, Method::quadrature).value, 2.8284271247461903, 1e-9);
}

TEST(Lambda, EmptySupportGivesZero) {
  EXPECT_EQ(lambda(box_model(1.0), 1.0).value, 0.0);
  EXPECT_NEAR(lambda(box_model(1.0), 0.25).value, 1.5, 1e-10);
}

TEST(Lambda, SourceAndErrorEstimate) {
  const auto q = lambda(make_gamma(), 0.3, Method::quadrature);
  EXPECT_EQ(q.source, FunctionalSource::quadrature);
  EXPECT_LE(q.abs_error_estimate, 1e-8);
  EXPECT_EQ(lambda(make_gamma(), 0.3).source, FunctionalSource::closed_form);
  EXPECT_THROW(lambda(make_gamma(), 0.0), LevyError);
  EXPECT_THROW(lambda(make_gamma(), -1.0), LevyError);
}

TEST(LambdaBand, Examples) {
  EXPECT_EQ(lambda_band(make_cauchy(), 0.3, 0.3).value, 0.0);
  EXPECT_NEAR(lambda_band(make_power_law(1.0, 0.5, 2.0), 0.5, 2.0).value, 2.8284271247461903, 1e-10);
  EXPECT_NEAR(lambda_band(make_cauchy(), 1.0, 2.0).value, 1.0 / kPi, 1e-12);
  EXPECT_NEAR(lambda_band(make_gamma(), 0.2, 0.7, Method::quadrature).value,
              lambda(make_gamma(), 0.2).value - lambda(make_gamma(), 0.7).value, 1e-9);
}

TEST(Sigma2, Examples) {
  EXPECT_NEAR(sigma2(box_model(1.0), 0.5).value, 1.0 / 12.0, 1e-11);
  EXPECT_NEAR(sigma2(make_power_law(1.0, 1.5, 2.0), 1.0).value, 4.0, 1e-12);
  EXPECT_NEAR(sigma2(make_power_law(1.0, 1.5, 2.0), 1.0, Method::quadrature).value, 4.0, 1e-8);
  double prev = 1e300;
  for (double a : {1.0, 0.1, 0.01, 1e-3, 1e-5, 1e-8}) {
    const double v = sigma2(make_cauchy(), a, Method::quadrature).value;
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_LT(prev, 1e-7);
}

TEST(DriftB, Examples) {
  EXPECT_EQ(drift_b(make_cauchy(), 0.7).value, 0.0);
  EXPECT_EQ(drift_b(make_power_law(1.0, 0.5, 2.0), 0.7).value, 0.0);
  EXPECT_NEAR(drift_b(make_gamma(), 1.0).value, 1.0 - std::exp(-1.0), 1e-14);
  EXPECT_NEAR(drift_b(make_gamma(), 1.0, Method::quadrature).value, 1.0 - std::exp(-1.0), 1e-10);
  EXPECT_NEAR(drift_b(one_sided_cauchy_like(), 0.5).value, -std::log(2.0), 1e-9);
}

TEST(Functionals, QuadratureMatchesClosedForms) {
  const LevyModel models[] = {make_cauchy(), make_gamma(), make_power_law(1.0, 0.5, 2.0),
                              make_power_law(1.0, 1.5, 2.0), make_power_law(0.7, 0.5, 2.0, true),
                              make_inverse_gaussian()};
  for (const auto& m : models) {
    for (double a : log_points(1e-3, 2.0, 15)) {
      SCOPED_TRACE(m.name + " a=" + std::to_string(a));
      expect_rel(lambda(m, a, Method::quadrature).value, m.closed_forms.lambda(a), 1e-8);
      expect_rel(sigma2(m, a, Method::quadrature).value, m.closed_forms.sigma2(a), 1e-8);
      const double b = m.closed_forms.drift(a);
      const double bq = drift_b(m, a, Method::quadrature).value;
      if (m.symmetric) EXPECT_EQ(bq, 0.0);
      else expect_rel(bq, b, 1e-8);
    }
  }
}

TEST(Functionals, GammaAgainstExpint) {
  for (double a : {0.01, 0.5, 1.0, 2.0}) {
    EXPECT_NEAR(lambda(make_gamma(), a, Method::quadrature).value, boost::math::expint(1, a),
                1e-9 * boost::math::expint(1, a));
  }
}

TEST(ClassBounds, Examples) {
  auto b = class_functional_bounds(1.0, 0.5, 1.0);
  EXPECT_NEAR(b.sigma2_over_x2_ub, 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(b.lambda_ub, 4.0, 1e-14);
  EXPECT_NEAR(b.b_ub_or_throw(), 4.0, 1e-14);
  b = class_functional_bounds(1.0, 1.0, 1.0);
  EXPECT_NEAR(b.sigma2_over_x2_ub, 2.0, 1e-14);
  EXPECT_NEAR(b.lambda_ub, 2.0, 1e-14);
  EXPECT_FALSE(b.b_ub.has_value());
  EXPECT_THROW(b.b_ub_or_throw(), LevyError);
  b = class_functional_bounds(1.0, 0.5, 2.0);
  EXPECT_NEAR(b.sigma2_over_x2_ub, 0.94280904158206336, 1e-12);
  EXPECT_NEAR(b.lambda_ub, 2.8284271247461903, 1e-12);
  EXPECT_NEAR(b.b_ub_or_throw(), 5.6568542494923806, 1e-12);
  EXPECT_THROW(class_functional_bounds(1.0, 0.5, 2.5), LevyError);
  EXPECT_THROW(class_functional_bounds(1.0, 2.0, 1.0), LevyError);
}

TEST(ClassBounds, DominateFunctionalsForBuiltins) {
  const LevyModel models[] = {make_cauchy(), make_gamma(), make_inverse_gaussian(), make_power_law(1.0, 0.5, 2.0),
                              make_power_law(1.0, 1.5, 2.0), make_stable(1.2, 0.5), make_tempered_stable(0.7, 1.0)};
  for (const auto& m : models) {
    ASSERT_TRUE(verify_class_membership(m, 200).pass) << m.name;
    for (double x : log_points(1e-3, 2.0, 20)) {
      const auto cb = class_functional_bounds(m.class_M, m.class_alpha, x);
      EXPECT_LE(sigma2(m, x).value / (x * x), cb.sigma2_over_x2_ub * (1 + 1e-12)) << m.name << " " << x;
      EXPECT_LE(lambda_band(m, x, 2.0).value, cb.lambda_ub * (1 + 1e-12)) << m.name << " " << x;
      if (cb.b_ub && m.variation == Variation::finite) {
        EXPECT_LE(std::abs(drift_b(m, x).value), *cb.b_ub * (1 + 1e-12)) << m.name << " " << x;
      }
    }
  }
}

TEST(Membership, Examples) {
  EXPECT_TRUE(verify_class_membership(make_cauchy(), 400).pass);
  const auto r = verify_class_membership(box_model(0.5), 400);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.class_ok);
  EXPECT_NEAR(r.worst_x, 1.0, 0.05);
  EXPECT_TRUE(verify_class_membership(make_gamma(1.0, 0.5), 400).pass);
  const auto bad = verify_class_membership(make_gamma(1.0, 0.0), 400);
  EXPECT_FALSE(bad.pass);
  EXPECT_FALSE(bad.class_ok);
}

TEST(Membership, DetectsAsymmetryAndGlobalBound) {
  LevyModel m = make_gamma();
  m.symmetric = true;
  EXPECT_FALSE(verify_class_membership(m, 100).symmetry_ok);
  LevyModel g = make_cauchy();
  g.global_M = 0.1;
  EXPECT_FALSE(verify_class_membership(g, 100).global_ok);
}

TEST(Functionals, UndeclaredVariation) {
  LevyModel m = box_model(1.0);
  m.variation.reset();
  try {
    (void)drift_b(m, 0.5);
    FAIL();
  } catch (const LevyError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UndeclaredVariation);
  }
}
