#pragma once

#include <variant>
#include <vector>

namespace levytail {

enum class TailMethod { arctan, incomplete_gamma, quadrature_ig, poisson_sum };

struct ExactTail {
  double prob = 0.0;
  TailMethod method = TailMethod::arctan;
  double abs_error = 0.0;
};

// Jump distributions for which the n-fold tail is computable.
struct PointMassJump {
  double value = 1.0;
};

// Piecewise-constant density: probability mass weights[i] spread uniformly on
// [edges[i], edges[i+1]]. Weights are normalized on construction.
struct PiecewiseConstantJump {
  std::vector<double> edges;
  std::vector<double> weights;
};

using JumpLaw = std::variant<PointMassJump, PiecewiseConstantJump>;

JumpLaw uniform_jump(double lo, double hi);
JumpLaw symmetric_uniform_jump(double lo, double hi);  // uniform on [-hi,-lo] U [lo,hi]

double jump_tail(const JumpLaw& law, double a);      // P(|Y| > a)
double jump_density(const JumpLaw& law, double x);   // 0 for point masses
double jump_mean(const JumpLaw& law);
double jump_density_sup(const JumpLaw& law);

// Regularized upper incomplete gamma Q(a, x) for 0 < a < 1, x > 0.
double upper_gamma_q(double a, double x);

ExactTail cauchy_tail(double eps, double t);
ExactTail gamma_tail(double eps, double t);
ExactTail ig_tail(double eps, double t);
ExactTail cpp_exact_tail(double rate, const JumpLaw& law, double eps, double t, int n_max = 0);
double smalljump_exact_cpp(double lambda_below, double eps, double t);

}  // namespace levytail
