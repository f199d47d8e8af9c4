#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levytail/closed_forms.hpp"
#include "levytail/quadrature.hpp"

namespace levytail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Variation { finite, infinite };
enum class FunctionalSource { closed_form, quadrature };
enum class Method { automatic, quadrature };

struct FunctionalValue {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  FunctionalSource source = FunctionalSource::quadrature;
};

struct LipschitzCert {
  double constant = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

// Integrable majorant of f for |x| >= x_env, used to truncate tail integrals.
struct TailEnvelope {
  enum class Kind { exponential, power };
  Kind kind = Kind::exponential;
  double x_env = 1.0;
  double scale = 1.0;
  double rate = 1.0;  // decay rate (exponential) or exponent p > 1 (power: scale*x^-p)
};

struct ClosedForms {
  std::function<double(double)> lambda;
  std::function<double(double)> sigma2;
  std::function<double(double)> drift;
  // P(|X_t| > eps) as a function of (eps, t).
  std::function<double(double, double)> tail;
};

enum class ModelKind {
  custom,
  cauchy,
  gamma,
  inverse_gaussian,
  stable,
  tempered_stable,
  power_law,
  cpp,
  discontinuous,
};

struct LevyModel {
  std::string name = "custom";
  ModelKind kind = ModelKind::custom;
  std::function<double(double)> density;
  bool symmetric = false;
  std::optional<Variation> variation;
  double class_alpha = 1.0;
  double class_M = 1.0;
  std::optional<double> global_M;
  std::optional<LipschitzCert> lipschitz_cert;
  // Certificate as a function of the cutoff; consulted when lipschitz_cert is unset.
  std::function<std::optional<LipschitzCert>(double)> lipschitz_rule;
  ClosedForms closed_forms;

  double support_pos = kInf;  // f(x) = 0 for x > support_pos
  double support_neg = kInf;  // f(x) = 0 for x < -support_neg
  std::vector<double> breakpoints;  // |x| where f may jump
  std::optional<TailEnvelope> envelope;

  std::map<std::string, double> params;
  std::optional<JumpLaw> jump_law;  // cpp kind: normalized jump distribution
  double jump_rate = 0.0;           // cpp kind: total intensity

  std::optional<LipschitzCert> lipschitz_for(double eps) const;
};

// ===== functionals =====

FunctionalValue lambda(const LevyModel& model, double a, Method method = Method::automatic,
                       const QuadOptions& opts = {});
FunctionalValue lambda_band(const LevyModel& model, double a, double b,
                            Method method = Method::automatic, const QuadOptions& opts = {});
FunctionalValue sigma2(const LevyModel& model, double a, Method method = Method::automatic,
                       const QuadOptions& opts = {});
FunctionalValue drift_b(const LevyModel& model, double eps, Method method = Method::automatic,
                        const QuadOptions& opts = {});

// First moment of the jumps with |x| in (lo, hi]: integral of x f(x).
FunctionalValue band_first_moment(const LevyModel& model, double lo, double hi,
                                  const QuadOptions& opts = {});

struct ClassBounds {
  double sigma2_over_x2_ub = 0.0;
  double lambda_ub = 0.0;
  std::optional<double> b_ub;  // unset when alpha >= 1

  double b_ub_or_throw() const;
};

ClassBounds class_functional_bounds(double M, double alpha, double x);

struct MembershipReport {
  bool pass = true;
  bool class_ok = true;
  bool global_ok = true;
  bool symmetry_ok = true;
  bool variation_ok = true;
  double worst_x = 0.0;
  double worst_ratio = 0.0;  // max f(x)|x|^{1+alpha}/M over the grid
  std::vector<std::string> failures;
};

MembershipReport verify_class_membership(const LevyModel& model, int grid_size);

// ===== builtins =====

LevyModel make_cauchy();
LevyModel make_gamma(double class_M = 1.0, double class_alpha = 0.5);
LevyModel make_inverse_gaussian(double class_M = 1.0, double class_alpha = 0.5);
// Symmetric stable with Levy density scale*|x|^{-1-alpha}.
LevyModel make_stable(double alpha, double scale);
// Symmetric tempered stable with density |x|^{-1-alpha} exp(-theta|x|).
LevyModel make_tempered_stable(double alpha, double theta);
// f(x) = M|x|^{-1-alpha} on 0 < |x| <= cut; one_sided keeps only x > 0.
LevyModel make_power_law(double M, double alpha, double cut, bool one_sided = false);
LevyModel make_cpp(double rate, const JumpLaw& law, double class_alpha = 0.5);

std::string_view to_string(Variation v);
std::string_view to_string(ModelKind k);

}  // namespace levytail
