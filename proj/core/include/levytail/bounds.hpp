#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levytail/constants.hpp"
#include "levytail/levy_model.hpp"

namespace levytail {

enum class Theorem { lemma_sj, lemma_sj_gauss, ps1, teo1, ps2, lambda2bis, lambda2, corollary, markov, ccpp };

std::string_view to_string(Theorem th);
std::optional<Theorem> theorem_from_string(std::string_view s);

struct BoundResult {
  double value = 0.0;
  Theorem theorem = Theorem::markov;
  double t_max = kInf;
  bool valid = true;
  double rate_exponent = 1.0;
  std::map<std::string, double> constants_used;
  std::vector<std::string> notes;
};

// Multiplicative perturbation of named constants (key "*" hits all), used by the validator self-test.
struct BoundOptions {
  std::map<std::string, double> constant_scale;

  double scaled(const std::string& name, double value) const;
};

// ===== concentration =====

// One-sided general Chernoff form e^{x/eps}(ts/(x eps+ts))^{(x eps+ts)/eps^2}.
double chernoff_general_one_sided(double sigma2, double eps, double t, double x);
// One-sided refined form (e sigma2/eps^2)^{x/eps} e^{1/e} t^{x/eps}; meaningful when t sigma2 <= eps^2.
double chernoff_refined_one_sided(double sigma2, double eps, double t, double x);

BoundResult chernoff_small_jumps(double sigma2, double eps, double t, double x, bool two_sided);
BoundResult chernoff_with_gaussian(double sigma2, double Sigma, double eps, double t, double x);
double markov_baseline(double sigma2, double eps, double t);

// ===== theorems =====

BoundResult bound_smalljump_fv(double M, double alpha, double eps, double t, bool symmetric,
                               const BoundOptions& opts = {});
BoundResult bound_cdf_fv(const LevyModel& model, double eps, double t, const BoundOptions& opts = {});
BoundResult bound_smalljump_iv(double M, double alpha, double eps, double t, bool two_sided = false,
                               const BoundOptions& opts = {});
BoundResult bound_cdf_iv_general(const LevyModel& model, double eps, double t, const BoundOptions& opts = {});
// lipschitz_M replaces the class constant M throughout (it must dominate class_M).
BoundResult bound_cdf_iv_lipschitz(const LevyModel& model, double eps, double t,
                                   std::optional<double> lipschitz_M = std::nullopt,
                                   const BoundOptions& opts = {});

enum class CorollaryVariant { fv, iv_general, iv_lipschitz };

// Intensities entering the substituted bound.
struct CorollaryLambdas {
  double lambda_eps = 0.0;    // lambda_eps
  double lambda_eps_1 = 0.0;  // lambda_{eps,1}
  double lambda_1 = 0.0;      // lambda_1
  double lambda_2eps = 0.0;   // lambda_{2 eps}
};

BoundResult bound_stable_type(double M1, double M2, double alpha, double eps, double t, CorollaryVariant variant,
                              const CorollaryLambdas& lambdas, const BoundOptions& opts = {});
CorollaryLambdas corollary_lambdas(const LevyModel& model, double eps);

double ccpp_centering_gap(double lambda, double mean_jump, double density_sup);

// Minimum valid bound on |P(|X_t|>eps) - lambda_eps t| among teo1, lambda2bis, lambda2.
BoundResult auto_select(const LevyModel& model, double eps, double t, const BoundOptions& opts = {});

// Dispatch by theorem name for the CLI and harness; corollary uses class_M for M1 and M2.
BoundResult bound_for(const LevyModel& model, Theorem th, double eps, double t, const BoundOptions& opts = {});

}  // namespace levytail
