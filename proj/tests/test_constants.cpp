#include <cmath>

#include <gtest/gtest.h>

#include "constants_oracle.hpp"
#include "levytail/constants.hpp"
#include "levytail/errors.hpp"

using namespace levytail;

namespace {

const double kAlphas[] = {0.1, 0.25, 0.5, 0.75, 0.9, 1.0, 1.25, 1.5, 1.75, 1.9};

void expect_rel(double got, double want, double tol, const std::string& what) {
  EXPECT_LE(std::abs(got - want), tol * std::abs(want)) << what << ": got " << got << " want " << want;
}

}  // namespace

TEST(Constants, MatchOracleOnAlphaGrid) {
  for (double a : kAlphas) {
    const auto table = constants(a);
    const auto ref = oracle::constants(a);
    ASSERT_EQ(table.entries.size(), ref.size()) << "alpha " << a;
    for (const auto& [name, v] : ref) expect_rel(table.at(name), v, 1e-12, name + " at alpha " + std::to_string(a));
  }
}

TEST(Constants, MatchOracleWithMAndEpsBranches) {
  for (double a : {1.0, 1.25, 1.5, 1.9}) {
    for (double M : {0.1, 1.0 / 3.14159, 1.0, 4.0}) {
      for (double eps : {0.5, 1.2, 2.0}) {
        const auto table = constants(a, M, eps);
        const auto ref = oracle::constants(a, M, eps);
        ASSERT_EQ(table.entries.size(), ref.size());
        for (const auto& [name, v] : ref) expect_rel(table.at(name), v, 1e-12, name);
      }
    }
  }
}

TEST(Constants, HandEvaluatedValues) {
  EXPECT_NEAR(const_C1a(0.5), 8.0 / 0.75, 1e-12);
  EXPECT_NEAR(const_D3(0.5), 2.0 * 2.5 / (1.5 * 0.5 * 0.5), 1e-12);
  EXPECT_NEAR(const_D1(0.5), 8.0 * (3.0 + 2.5 / 0.75), 1e-12);
  EXPECT_NEAR(const_D2(0.5), 36.836560, 1e-5);
  const double e21e = std::exp(2.0 + 1.0 / std::exp(1.0));
  EXPECT_NEAR(const_C2(0.5), 3.0 * e21e / 2.25 + 64.0 / 3.0 + 8.0, 1e-11);
  EXPECT_NEAR(const_E1(1.5), 4.0 * e21e / 0.25 + 32.0 / 2.25 + std::pow(2.0, 2.5) / (9.0 * 0.75), 1e-10);
  EXPECT_NEAR(const_K1(1.5), 32.0 * (e21e / 0.25 + 1.0 / 2.25), 1e-9);
  EXPECT_NEAR(const_G2(1.5, 1.0), 8.0 / 0.75 + const_E1(1.5), 1e-10);
}

TEST(Constants, Assignments) {
  for (double a : {0.1, 0.5, 0.9}) {
    EXPECT_DOUBLE_EQ(const_C1(a), 16.0 + 64.0 / (a * a) + const_C1a(a) + const_C2a(a));
  }
  for (double a : {1.0, 1.5, 1.9}) {
    for (double eps : {0.5, 1.2, 3.0}) EXPECT_DOUBLE_EQ(const_F2(a, eps), const_K6(a, eps));
    EXPECT_DOUBLE_EQ(const_F3(a, 1.2), const_K5(a, 1.2));
    EXPECT_DOUBLE_EQ(const_F5(a), 2.0 * const_K3(a));
  }
}

TEST(Constants, StrictlyPositive) {
  for (double a : kAlphas) {
    for (const auto& [name, v] : constants(a, 1.0, 1.2).entries) EXPECT_GT(v, 0.0) << name << " alpha " << a;
  }
}

TEST(Constants, DomainErrors) {
  EXPECT_THROW(const_C2(1.0), LevyError);
  EXPECT_THROW(const_E1(0.5), LevyError);
  EXPECT_THROW(const_K2(1.0), LevyError);
  EXPECT_THROW(const_K5(1.5, 0.5), LevyError);
  EXPECT_THROW(constants(2.0), LevyError);
  EXPECT_THROW(constants(0.0), LevyError);
  try {
    constants(0.5).at("K1");
    FAIL();
  } catch (const LevyError& e) {
    EXPECT_EQ(e.code(), ErrorCode::AlphaOutOfRange);
  }
}

TEST(Constants, EpsBranchSelection) {
  EXPECT_FALSE(constants(1.5, 1.0, 0.8).has("K5"));
  EXPECT_TRUE(constants(1.5, 1.0, 1.2).has("K5"));
  EXPECT_NE(const_K5(1.5, 1.2), const_K5(1.5, 1.6));
  EXPECT_DOUBLE_EQ(const_K6(1.5, 0.5), const_K6(1.5, 1.2));
  EXPECT_NEAR(const_K6(1.5, 2.0), 2.0 * std::pow(4.0 / 3.0, 1.5) / 0.5, 1e-12);
}
