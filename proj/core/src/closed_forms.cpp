#include "levytail/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>

#include "levytail/errors.hpp"
#include "levytail/quadrature.hpp"

namespace levytail {
namespace {

constexpr double kPi = std::numbers::pi;

PiecewiseConstantJump normalized(PiecewiseConstantJump law) {
  if (law.edges.size() != law.weights.size() + 1 || law.weights.empty()) {
    raise(ErrorCode::UnsupportedJumpLaw, "piecewise-constant jump law needs edges.size() == weights.size()+1");
  }
  for (std::size_t i = 0; i + 1 < law.edges.size(); ++i) {
    if (!(law.edges[i + 1] > law.edges[i])) raise(ErrorCode::UnsupportedJumpLaw, "jump law edges must increase");
  }
  double total = std::accumulate(law.weights.begin(), law.weights.end(), 0.0);
  if (!(total > 0.0)) raise(ErrorCode::UnsupportedJumpLaw, "jump law has no mass");
  for (double& w : law.weights) {
    if (w < 0.0) raise(ErrorCode::UnsupportedJumpLaw, "negative jump weight");
    w /= total;
  }
  return law;
}

// P(Y > a) for a piecewise-constant law.
double pc_upper(const PiecewiseConstantJump& law, double a) {
  double p = 0.0;
  for (std::size_t i = 0; i < law.weights.size(); ++i) {
    const double lo = law.edges[i], hi = law.edges[i + 1];
    if (a <= lo) {
      p += law.weights[i];
    } else if (a < hi) {
      p += law.weights[i] * (hi - a) / (hi - lo);
    }
  }
  return p;
}

// P(Y < a)
double pc_lower(const PiecewiseConstantJump& law, double a) {
  double p = 0.0;
  for (std::size_t i = 0; i < law.weights.size(); ++i) {
    const double lo = law.edges[i], hi = law.edges[i + 1];
    if (a >= hi) {
      p += law.weights[i];
    } else if (a > lo) {
      p += law.weights[i] * (a - lo) / (hi - lo);
    }
  }
  return p;
}

double poisson_pmf(int n, double mu) {
  return std::exp(n * std::log(mu) - mu - std::lgamma(n + 1.0));
}

int auto_n_max(double mu) {
  // Smallest n with P(N > n) below 1e-17, using P(N > n) <= pmf(n+1) / (1 - mu/(n+2)).
  double pmf = std::exp(-mu);
  int n = 0;
  while (n < 400) {
    const double next = pmf * mu / (n + 1);
    if (n + 2 > mu && next / (1.0 - mu / (n + 2)) < 1e-17) break;
    ++n;
    pmf = next;
  }
  return std::max(n, 1);
}

}  // namespace

JumpLaw uniform_jump(double lo, double hi) {
  return normalized(PiecewiseConstantJump{{lo, hi}, {1.0}});
}

JumpLaw symmetric_uniform_jump(double lo, double hi) {
  if (lo == 0.0) return normalized(PiecewiseConstantJump{{-hi, hi}, {1.0}});
  return normalized(PiecewiseConstantJump{{-hi, -lo, lo, hi}, {0.5, 0.0, 0.5}});
}

double jump_tail(const JumpLaw& law, double a) {
  if (const auto* pm = std::get_if<PointMassJump>(&law)) {
    return std::abs(pm->value) > a ? 1.0 : 0.0;
  }
  const auto& pc = std::get<PiecewiseConstantJump>(law);
  return pc_upper(pc, a) + pc_lower(pc, -a);
}

double jump_density(const JumpLaw& law, double x) {
  if (std::holds_alternative<PointMassJump>(law)) return 0.0;
  const auto& pc = std::get<PiecewiseConstantJump>(law);
  for (std::size_t i = 0; i < pc.weights.size(); ++i) {
    if (x >= pc.edges[i] && x < pc.edges[i + 1]) {
      return pc.weights[i] / (pc.edges[i + 1] - pc.edges[i]);
    }
  }
  return 0.0;
}

double jump_mean(const JumpLaw& law) {
  if (const auto* pm = std::get_if<PointMassJump>(&law)) return pm->value;
  const auto& pc = std::get<PiecewiseConstantJump>(law);
  double m = 0.0;
  for (std::size_t i = 0; i < pc.weights.size(); ++i) {
    m += pc.weights[i] * 0.5 * (pc.edges[i] + pc.edges[i + 1]);
  }
  return m;
}

double jump_density_sup(const JumpLaw& law) {
  if (std::holds_alternative<PointMassJump>(law)) return std::numeric_limits<double>::infinity();
  const auto& pc = std::get<PiecewiseConstantJump>(law);
  double s = 0.0;
  for (std::size_t i = 0; i < pc.weights.size(); ++i) {
    s = std::max(s, pc.weights[i] / (pc.edges[i + 1] - pc.edges[i]));
  }
  return s;
}

double upper_gamma_q(double a, double x) {
  if (!(a > 0.0 && a < 1.0)) raise(ErrorCode::ShapeTooLarge, "upper_gamma_q supports 0 < a < 1");
  if (!(x > 0.0)) return 1.0;
  constexpr double eps = 1e-17;
  if (x < 1.0) {
    // Q = (1 - x^a/Gamma(a+1)) - x^a/Gamma(a) * sum_{n>=1} (-x)^n / (n! (a+n))
    const double head = -std::expm1(a * std::log(x) - std::lgamma(a + 1.0));
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n < 200; ++n) {
      term *= -x / n;
      const double add = term / (a + n);
      sum += add;
      if (std::abs(add) < eps * std::abs(sum)) break;
    }
    const double pref = std::exp(a * std::log(x) - std::lgamma(a));
    return head - pref * sum;
  }
  // Modified Lentz continued fraction for Gamma(a,x) e^x x^-a.
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

ExactTail cauchy_tail(double eps, double t) {
  if (!(eps > 0.0) || !(t > 0.0)) raise(ErrorCode::InvalidArgument, "cauchy_tail requires eps > 0 and t > 0");
  ExactTail out;
  out.prob = (2.0 / kPi) * std::atan(t / eps);
  out.method = TailMethod::arctan;
  out.abs_error = 4.0 * std::numeric_limits<double>::epsilon() * out.prob;
  return out;
}

ExactTail gamma_tail(double eps, double t) {
  if (!(t > 0.0) || t >= 1.0) raise(ErrorCode::ShapeTooLarge, "gamma_tail requires 0 < t < 1");
  if (!(eps > 0.0)) raise(ErrorCode::InvalidArgument, "gamma_tail requires eps > 0");
  ExactTail out;
  out.prob = upper_gamma_q(t, eps);
  out.method = TailMethod::incomplete_gamma;
  out.abs_error = 1e-14 * std::max(out.prob, 1e-300) + 1e-16;
  return out;
}

ExactTail ig_tail(double eps, double t) {
  if (!(eps > 0.0) || !(t > 0.0)) raise(ErrorCode::InvalidArgument, "ig_tail requires eps > 0 and t > 0");
  const double c = kPi * t * t;
  auto integrand = [c](double x) { return std::exp(-x - c / x) * std::pow(x, -1.5); };
  const double split = std::max(eps, c);
  const double x_max = split + 60.0;
  QuadOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_tol = 1e-16;
  QuadResult r = integrate_log_split(integrand, eps, x_max, {split, 1.0, 10.0}, opts);
  if (!r.converged) raise(ErrorCode::QuadratureFailure, "ig_tail integral did not converge");
  const double pref = t * std::exp(2.0 * t * std::sqrt(kPi));
  ExactTail out;
  // Remainder beyond x_max is below exp(-x_max).
  out.prob = std::min(1.0, pref * r.value);
  out.abs_error = pref * (r.abs_error + std::exp(-x_max));
  out.method = TailMethod::quadrature_ig;
  return out;
}

namespace {

struct NFoldTails {
  std::vector<double> tail;   // tail[n] = P(|S_n| > eps), n = 0..n_max
  std::vector<double> error;  // discretization error estimate per n
};

NFoldTails nfold_tails(const JumpLaw& law, double eps, int n_max) {
  NFoldTails out;
  out.tail.assign(n_max + 1, 0.0);
  out.error.assign(n_max + 1, 0.0);
  if (const auto* pm = std::get_if<PointMassJump>(&law)) {
    for (int n = 1; n <= n_max; ++n) out.tail[n] = std::abs(n * pm->value) > eps ? 1.0 : 0.0;
    return out;
  }
  const auto& pc = std::get<PiecewiseConstantJump>(law);
  out.tail[1] = jump_tail(law, eps);
  if (n_max < 2) return out;

  constexpr int kCells = 1 << 14;
  const double lo = pc.edges.front();
  const double hi = pc.edges.back();
  const double h = n_max * (hi - lo) / kCells;
  const int m = static_cast<int>(std::ceil((hi - lo) / h));
  // Node masses: each cell's mass split between its two end nodes.
  std::vector<double> q(m + 1, 0.0);
  for (int j = 0; j < m; ++j) {
    const double a = lo + j * h;
    const double b = std::min(lo + (j + 1) * h, hi);
    const double mass = pc_lower(pc, b) - pc_lower(pc, a);
    q[j] += 0.5 * mass;
    q[j + 1] += 0.5 * mass;
  }
  std::vector<double> p = q;
  for (int n = 2; n <= n_max; ++n) {
    std::vector<double> next(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double pi = p[i];
      if (pi == 0.0) continue;
      double* dst = next.data() + i;
      for (std::size_t j = 0; j < q.size(); ++j) dst[j] += pi * q[j];
    }
    p.swap(next);
    const double origin = n * lo;
    // Node k carries the mass of [x_k - h/2, x_k + h/2]; the CDF is interpolated linearly between midpoints.
    std::vector<double> below(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) below[k + 1] = below[k] + p[k];
    auto cdf = [&](double x) {
      const double u = (x - origin) / h + 0.5;
      if (u <= 0.0) return 0.0;
      if (u >= static_cast<double>(p.size())) return below.back();
      const auto k = static_cast<std::size_t>(u);
      return below[k] + (u - static_cast<double>(k)) * p[k];
    };
    const double total = below.back();
    const double tail = (total - cdf(eps)) + cdf(-eps);
    double near = 0.0;
    const double band = n * h;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (std::abs(std::abs(origin + k * h) - eps) <= band) near += p[k];
    }
    out.tail[n] = std::min(1.0, tail);
    out.error[n] = near;
  }
  return out;
}

}  // namespace

ExactTail cpp_exact_tail(double rate, const JumpLaw& law, double eps, double t, int n_max) {
  if (!(eps > 0.0) || t < 0.0 || rate < 0.0) raise(ErrorCode::InvalidArgument, "cpp_exact_tail requires eps > 0, t >= 0, rate >= 0");
  ExactTail out;
  out.method = TailMethod::poisson_sum;
  const double mu = rate * t;
  if (mu == 0.0) return out;
  // All jumps beyond eps: exceedance iff at least one jump.
  if (jump_tail(law, eps) == 1.0 && std::holds_alternative<PiecewiseConstantJump>(law)) {
    const auto& pc = std::get<PiecewiseConstantJump>(law);
    if (pc.edges.front() >= eps || pc.edges.back() <= -eps) {
      out.prob = -std::expm1(-mu);
      out.abs_error = 2.0 * std::numeric_limits<double>::epsilon();
      return out;
    }
  }
  if (n_max <= 0) n_max = auto_n_max(mu);
  const NFoldTails tails = nfold_tails(law, eps, n_max);
  double prob = 0.0, err = 0.0, mass = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double w = poisson_pmf(n, mu);
    prob += w * tails.tail[n];
    err += w * tails.error[n];
    mass += w;
  }
  const double remainder = std::max(0.0, -std::expm1(-mu) - mass);
  out.prob = std::min(1.0, prob);
  out.abs_error = err + remainder;
  return out;
}

double smalljump_exact_cpp(double lambda_below, double eps, double t) {
  if (!(eps > 0.0) || t < 0.0 || lambda_below < 0.0) raise(ErrorCode::InvalidArgument, "smalljump_exact_cpp requires eps > 0");
  const double x = lambda_below * t;
  if (x == 0.0) return 0.0;
  if (x < 0.5) {
    // e^{-x} sum_{k>=2} x^k/k!
    double term = x * x / 2.0;
    double sum = 0.0;
    for (int k = 2; k < 60; ++k) {
      sum += term;
      term *= x / (k + 1);
      if (term < 1e-18 * sum) break;
    }
    return std::exp(-x) * sum;
  }
  return 1.0 - std::exp(-x) * (1.0 + x);
}

}  // namespace levytail
