#include "levytail/levy_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/expint.hpp>

#include "levytail/errors.hpp"

namespace levytail {
namespace {

constexpr double kPi = std::numbers::pi;

double extent(const LevyModel& m, int side) { return side > 0 ? m.support_pos : m.support_neg; }

double ipow(double x, int k) {
  switch (k) {
    case 0: return 1.0;
    case 1: return x;
    case 2: return x * x;
    default: return std::pow(x, k);
  }
}

// Integral over x in [lo, hi] of x^k f(side*x); lo == 0 and hi == inf allowed.
QuadResult half_integral(const LevyModel& m, int side, int k, double lo, double hi,
                         const QuadOptions& opts) {
  QuadResult out;
  out.converged = true;
  hi = std::min(hi, extent(m, side));
  if (!(hi > lo)) return out;
  double extra = 0.0;
  const double target = 0.01 * opts.abs_tol;
  if (lo == 0.0) {
    const double p = k - m.class_alpha;
    double d0;
    if (p > 0.0) {
      // Certified by f(x) <= M x^{-1-alpha} on (0, 2].
      d0 = std::pow(target * p / m.class_M, 1.0 / p);
      d0 = std::clamp(d0, 1e-300, std::min(hi, 2.0) * 0.5);
      extra = m.class_M * std::pow(d0, p) / p;
    } else {
      d0 = std::min(hi, 2.0) * 1e-14;
      extra = 0.0;
    }
    lo = d0;
  }
  if (std::isinf(hi)) {
    if (!m.envelope || k != 0) {
      raise(ErrorCode::NonIntegrableTail, "unbounded support without a tail envelope");
    }
    const TailEnvelope& env = *m.envelope;
    double x_max;
    if (env.kind == TailEnvelope::Kind::exponential) {
      x_max = std::log(env.scale / (env.rate * target)) / env.rate;
      extra += env.scale * std::exp(-env.rate * std::max(x_max, env.x_env)) / env.rate;
    } else {
      if (!(env.rate > 1.0)) raise(ErrorCode::NonIntegrableTail, "power envelope exponent must exceed 1");
      x_max = std::pow(env.scale / ((env.rate - 1.0) * target), 1.0 / (env.rate - 1.0));
      extra += env.scale * std::pow(std::max(x_max, env.x_env), 1.0 - env.rate) / (env.rate - 1.0);
    }
    hi = std::max({x_max, env.x_env, 2.0 * lo});
  }
  auto f = [&m, side, k](double x) { return ipow(x, k) * m.density(side * x); };
  std::vector<double> breaks = m.breakpoints;
  breaks.push_back(1.0);
  breaks.push_back(2.0);
  out = integrate_log_split(f, lo, hi, breaks, opts);
  out.abs_error += extra;
  return out;
}

QuadResult both_sides(const LevyModel& m, int k, double lo, double hi, const QuadOptions& opts,
                      bool odd) {
  QuadResult pos = half_integral(m, +1, k, lo, hi, opts);
  if (m.symmetric) {
    QuadResult out = pos;
    out.value = odd ? 0.0 : 2.0 * pos.value;
    out.abs_error = odd ? 0.0 : 2.0 * pos.abs_error;
    return out;
  }
  QuadResult neg = half_integral(m, -1, k, lo, hi, opts);
  QuadResult out;
  out.value = odd ? pos.value - neg.value : pos.value + neg.value;
  out.abs_error = pos.abs_error + neg.abs_error;
  out.evaluations = pos.evaluations + neg.evaluations;
  out.converged = pos.converged && neg.converged;
  return out;
}

FunctionalValue closed(double v) {
  return {v, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v), FunctionalSource::closed_form};
}

FunctionalValue from_quad(const QuadResult& r) { return {r.value, r.abs_error, FunctionalSource::quadrature}; }

}  // namespace

std::optional<LipschitzCert> LevyModel::lipschitz_for(double eps) const {
  if (lipschitz_cert) return lipschitz_cert;
  if (lipschitz_rule) return lipschitz_rule(eps);
  return std::nullopt;
}

FunctionalValue lambda(const LevyModel& model, double a, Method method, const QuadOptions& opts) {
  if (!(a > 0.0)) raise(ErrorCode::InvalidCutoff, "lambda requires a > 0");
  if (method == Method::automatic && model.closed_forms.lambda) return closed(model.closed_forms.lambda(a));
  QuadResult r = both_sides(model, 0, a, kInf, opts, false);
  if (!r.converged) raise(ErrorCode::NonIntegrableTail, "tail integral did not converge within the subdivision budget");
  return from_quad(r);
}

FunctionalValue lambda_band(const LevyModel& model, double a, double b, Method method,
                            const QuadOptions& opts) {
  if (!(a > 0.0) || b < a) raise(ErrorCode::InvalidCutoff, "lambda_band requires 0 < a <= b");
  if (a == b) return {0.0, 0.0, FunctionalSource::closed_form};
  if (method == Method::automatic && model.closed_forms.lambda) {
    FunctionalValue out = closed(model.closed_forms.lambda(a) - model.closed_forms.lambda(b));
    return out;
  }
  QuadResult r = both_sides(model, 0, a, b, opts, false);
  if (!r.converged) raise(ErrorCode::QuadratureFailure, "band integral did not converge");
  return from_quad(r);
}

FunctionalValue sigma2(const LevyModel& model, double a, Method method, const QuadOptions& opts) {
  if (!(a > 0.0)) raise(ErrorCode::InvalidCutoff, "sigma2 requires a > 0");
  if (method == Method::automatic && model.closed_forms.sigma2) return closed(model.closed_forms.sigma2(a));
  QuadResult r = both_sides(model, 2, 0.0, a, opts, false);
  if (!r.converged) raise(ErrorCode::QuadratureFailure, "sigma2 quadrature tolerance not met");
  return from_quad(r);
}

FunctionalValue drift_b(const LevyModel& model, double eps, Method method, const QuadOptions& opts) {
  if (!(eps > 0.0)) raise(ErrorCode::InvalidCutoff, "drift_b requires eps > 0");
  if (!model.variation) raise(ErrorCode::UndeclaredVariation, "model variation must be declared");
  if (model.symmetric) return {0.0, 0.0, FunctionalSource::closed_form};
  if (method == Method::automatic && model.closed_forms.drift) return closed(model.closed_forms.drift(eps));
  QuadResult r;
  if (*model.variation == Variation::finite) {
    r = both_sides(model, 1, 0.0, eps, opts, true);
  } else if (eps < 1.0) {
    r = both_sides(model, 1, eps, 1.0, opts, true);
    r.value = -r.value;
  } else {
    r = both_sides(model, 1, 1.0, eps, opts, true);
  }
  if (!r.converged) raise(ErrorCode::QuadratureFailure, "drift quadrature tolerance not met");
  return from_quad(r);
}

FunctionalValue band_first_moment(const LevyModel& model, double lo, double hi, const QuadOptions& opts) {
  if (!(lo > 0.0) || hi < lo) raise(ErrorCode::InvalidCutoff, "band_first_moment requires 0 < lo <= hi");
  if (model.symmetric || lo == hi) return {0.0, 0.0, FunctionalSource::closed_form};
  QuadResult r = both_sides(model, 1, lo, hi, opts, true);
  if (!r.converged) raise(ErrorCode::QuadratureFailure, "band first moment did not converge");
  return from_quad(r);
}

double ClassBounds::b_ub_or_throw() const {
  if (!b_ub) raise(ErrorCode::AlphaOutOfRange, "b bound requires alpha < 1");
  return *b_ub;
}

ClassBounds class_functional_bounds(double M, double alpha, double x) {
  if (!(M > 0.0)) raise(ErrorCode::InvalidArgument, "class bounds require M > 0");
  if (!(alpha > 0.0 && alpha < 2.0)) raise(ErrorCode::AlphaOutOfRange, "alpha must lie in (0,2)");
  if (!(x > 0.0 && x <= 2.0)) raise(ErrorCode::InvalidCutoff, "class bounds require 0 < x <= 2");
  ClassBounds out;
  const double xa = std::pow(x, -alpha);
  out.sigma2_over_x2_ub = 2.0 * M * xa / (2.0 - alpha);
  out.lambda_ub = 2.0 * M * xa / alpha;
  if (alpha < 1.0) out.b_ub = 2.0 * M * x * xa / (1.0 - alpha);
  return out;
}

MembershipReport verify_class_membership(const LevyModel& model, int grid_size) {
  if (grid_size < 2) raise(ErrorCode::InvalidArgument, "grid_size must be at least 2");
  MembershipReport rep;
  constexpr double rel = 1e-12;
  const double alpha = model.class_alpha;
  auto note = [&rep](const std::string& s) {
    rep.pass = false;
    rep.failures.push_back(s);
  };
  if (!(alpha > 0.0 && alpha < 2.0)) {
    rep.class_ok = false;
    note("class_alpha outside (0,2)");
    return rep;
  }
  const double lo = 1e-6, hi = 2.0;
  double worst = 0.0;
  double worst_sym = 0.0;
  double worst_sym_x = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double x = lo * std::pow(hi / lo, static_cast<double>(i) / (grid_size - 1));
    for (int side : {+1, -1}) {
      const double r = model.density(side * x) * std::pow(x, 1.0 + alpha) / model.class_M;
      if (r > worst) {
        worst = r;
        rep.worst_x = side * x;
      }
    }
    if (model.symmetric) {
      const double fp = model.density(x), fm = model.density(-x);
      const double d = std::abs(fp - fm) / std::max({std::abs(fp), std::abs(fm), 1e-300});
      if (d > worst_sym) {
        worst_sym = d;
        worst_sym_x = x;
      }
    }
  }
  rep.worst_ratio = worst;
  if (worst > 1.0 + rel) {
    rep.class_ok = false;
    std::ostringstream os;
    os << "f(x)|x|^(1+alpha) exceeds class_M at x=" << rep.worst_x << " (ratio " << worst << ")";
    note(os.str());
  }
  if (model.symmetric && worst_sym > rel) {
    rep.symmetry_ok = false;
    std::ostringstream os;
    os << "density not symmetric at x=" << worst_sym_x;
    note(os.str());
  }
  if (model.global_M) {
    double x_max = 10.0;
    for (double b : model.breakpoints) x_max = std::max(x_max, 2.0 * b);
    if (model.envelope) x_max = std::max(x_max, 2.0 * model.envelope->x_env);
    double gworst = 0.0, gx = 0.0;
    for (int i = 0; i < grid_size; ++i) {
      const double x = std::pow(x_max, static_cast<double>(i) / (grid_size - 1));
      for (int side : {+1, -1}) {
        const double v = model.density(side * x);
        if (v > gworst) {
          gworst = v;
          gx = side * x;
        }
      }
    }
    if (gworst > *model.global_M * (1.0 + rel)) {
      rep.global_ok = false;
      std::ostringstream os;
      os << "density exceeds global_M at x=" << gx;
      note(os.str());
    }
  }
  if (model.variation && *model.variation == Variation::finite && !model.symmetric) {
    // Inner-cutoff stabilization of the first absolute moment.
    QuadOptions opts;
    double prev = -1.0;
    double prev_step = kInf;
    for (double d : {1e-4, 1e-6, 1e-8}) {
      double v = 0.0;
      try {
        for (int side : {+1, -1}) v += half_integral(model, side, 1, d, std::min(1.0, extent(model, side)), opts).value;
      } catch (const LevyError&) {
        v = kInf;
      }
      if (prev >= 0.0) {
        const double step = std::abs(v - prev);
        if (!(step <= prev_step) && step > 1e-9 * std::max(1.0, std::abs(v))) {
          rep.variation_ok = false;
        }
        prev_step = step;
      }
      prev = v;
    }
    if (!rep.variation_ok) note("first absolute moment does not stabilize under shrinking cutoffs");
  }
  return rep;
}

// ===== builtins =====

namespace {

std::function<std::optional<LipschitzCert>(double)> power_lipschitz_rule(double c, double alpha, double theta) {
  return [c, alpha, theta](double eps) -> std::optional<LipschitzCert> {
    const double rho = std::min(eps, 1.0);
    const double lo = 0.75 * rho;
    const double hi = 2.0 * eps - 0.75 * rho;
    // |f'(x)| = c x^{-1-alpha} e^{-theta x} ((1+alpha)/x + theta), largest at lo.
    const double k = c * std::pow(lo, -1.0 - alpha) * std::exp(-theta * lo) * ((1.0 + alpha) / lo + theta);
    return LipschitzCert{k, lo, hi};
  };
}

}  // namespace

LevyModel make_cauchy() {
  LevyModel m;
  m.name = "cauchy";
  m.kind = ModelKind::cauchy;
  m.density = [](double x) { return x == 0.0 ? 0.0 : 1.0 / (kPi * x * x); };
  m.symmetric = true;
  m.variation = Variation::infinite;
  m.class_alpha = 1.0;
  m.class_M = 1.0 / kPi;
  m.global_M = 1.0 / kPi;
  m.envelope = TailEnvelope{TailEnvelope::Kind::power, 1.0, 1.0 / kPi, 2.0};
  m.lipschitz_rule = [](double eps) -> std::optional<LipschitzCert> {
    const double rho = std::min(eps, 1.0);
    return LipschitzCert{128.0 / (27.0 * kPi) * std::pow(rho, -3.0), 0.75 * rho, 2.0 * eps - 0.75 * rho};
  };
  m.closed_forms.lambda = [](double a) { return 2.0 / (kPi * a); };
  m.closed_forms.sigma2 = [](double a) { return 2.0 * a / kPi; };
  m.closed_forms.drift = [](double) { return 0.0; };
  m.closed_forms.tail = [](double eps, double t) { return cauchy_tail(eps, t).prob; };
  return m;
}

LevyModel make_gamma(double class_M, double class_alpha) {
  LevyModel m;
  m.name = "gamma";
  m.kind = ModelKind::gamma;
  m.density = [](double x) { return x > 0.0 ? std::exp(-x) / x : 0.0; };
  m.symmetric = false;
  m.variation = Variation::finite;
  m.class_alpha = class_alpha;
  m.class_M = class_M;
  m.global_M = std::exp(-1.0);
  m.support_neg = 0.0;
  m.envelope = TailEnvelope{TailEnvelope::Kind::exponential, 1.0, 1.0, 1.0};
  m.closed_forms.lambda = [](double a) { return boost::math::expint(1, a); };
  m.closed_forms.sigma2 = [](double a) { return -std::expm1(-a) - a * std::exp(-a); };
  m.closed_forms.drift = [](double e) { return -std::expm1(-e); };
  m.closed_forms.tail = [](double eps, double t) { return gamma_tail(eps, t).prob; };
  return m;
}

LevyModel make_inverse_gaussian(double class_M, double class_alpha) {
  LevyModel m;
  m.name = "inverse_gaussian";
  m.kind = ModelKind::inverse_gaussian;
  m.density = [](double x) { return x > 0.0 ? std::exp(-x) * std::pow(x, -1.5) : 0.0; };
  m.symmetric = false;
  m.variation = Variation::finite;
  m.class_alpha = class_alpha;
  m.class_M = class_M;
  m.global_M = std::exp(-1.0);
  m.support_neg = 0.0;
  m.envelope = TailEnvelope{TailEnvelope::Kind::exponential, 1.0, 1.0, 1.0};
  const double sp = std::sqrt(kPi);
  m.closed_forms.lambda = [sp](double a) {
    const double r = std::sqrt(a);
    return 2.0 * std::exp(-a) / r - 2.0 * sp * boost::math::erfc(r);
  };
  m.closed_forms.sigma2 = [sp](double a) {
    const double r = std::sqrt(a);
    return 0.5 * sp * boost::math::erf(r) - r * std::exp(-a);
  };
  m.closed_forms.drift = [sp](double e) { return sp * boost::math::erf(std::sqrt(e)); };
  m.closed_forms.tail = [](double eps, double t) { return ig_tail(eps, t).prob; };
  return m;
}

LevyModel make_stable(double alpha, double scale) {
  if (!(alpha > 0.0 && alpha < 2.0)) raise(ErrorCode::AlphaOutOfRange, "stable alpha must lie in (0,2)");
  if (!(scale > 0.0)) raise(ErrorCode::InvalidArgument, "stable scale must be positive");
  LevyModel m;
  m.name = "stable";
  m.kind = ModelKind::stable;
  m.params = {{"alpha", alpha}, {"scale", scale}};
  m.density = [alpha, scale](double x) { return x == 0.0 ? 0.0 : scale * std::pow(std::abs(x), -1.0 - alpha); };
  m.symmetric = true;
  m.variation = alpha < 1.0 ? Variation::finite : Variation::infinite;
  m.class_alpha = alpha;
  m.class_M = scale;
  m.global_M = scale;
  m.envelope = TailEnvelope{TailEnvelope::Kind::power, 1.0, scale, 1.0 + alpha};
  m.lipschitz_rule = power_lipschitz_rule(scale, alpha, 0.0);
  m.closed_forms.lambda = [alpha, scale](double a) { return 2.0 * scale * std::pow(a, -alpha) / alpha; };
  m.closed_forms.sigma2 = [alpha, scale](double a) { return 2.0 * scale * std::pow(a, 2.0 - alpha) / (2.0 - alpha); };
  m.closed_forms.drift = [](double) { return 0.0; };
  if (alpha == 1.0) {
    const double sigma = scale * kPi;
    m.closed_forms.tail = [sigma](double eps, double t) { return cauchy_tail(eps, sigma * t).prob; };
  }
  return m;
}

LevyModel make_tempered_stable(double alpha, double theta) {
  if (!(alpha > 0.0 && alpha < 2.0)) raise(ErrorCode::AlphaOutOfRange, "tempered stable alpha must lie in (0,2)");
  if (!(theta > 0.0)) raise(ErrorCode::InvalidArgument, "tempering theta must be positive");
  LevyModel m;
  m.name = "tempered_stable";
  m.kind = ModelKind::tempered_stable;
  m.params = {{"alpha", alpha}, {"theta", theta}};
  m.density = [alpha, theta](double x) {
    const double ax = std::abs(x);
    return ax == 0.0 ? 0.0 : std::pow(ax, -1.0 - alpha) * std::exp(-theta * ax);
  };
  m.symmetric = true;
  m.variation = alpha < 1.0 ? Variation::finite : Variation::infinite;
  m.class_alpha = alpha;
  m.class_M = 1.0;
  m.global_M = std::exp(-theta);
  m.envelope = TailEnvelope{TailEnvelope::Kind::exponential, 1.0, 1.0, theta};
  m.lipschitz_rule = power_lipschitz_rule(1.0, alpha, theta);
  return m;
}

LevyModel make_power_law(double M, double alpha, double cut, bool one_sided) {
  if (!(alpha > 0.0 && alpha < 2.0)) raise(ErrorCode::AlphaOutOfRange, "power_law alpha must lie in (0,2)");
  if (!(M > 0.0) || !(cut > 0.0)) raise(ErrorCode::InvalidArgument, "power_law requires M > 0 and cut > 0");
  LevyModel m;
  m.name = "power_law";
  m.kind = ModelKind::power_law;
  m.params = {{"M", M}, {"alpha", alpha}, {"cut", cut}, {"one_sided", one_sided ? 1.0 : 0.0}};
  m.density = [M, alpha, cut, one_sided](double x) {
    const double ax = std::abs(x);
    if (ax == 0.0 || ax > cut || (one_sided && x < 0.0)) return 0.0;
    return M * std::pow(ax, -1.0 - alpha);
  };
  m.symmetric = !one_sided;
  m.variation = alpha < 1.0 ? Variation::finite : Variation::infinite;
  m.class_alpha = alpha;
  m.class_M = M;
  m.global_M = M;
  m.support_pos = cut;
  m.support_neg = one_sided ? 0.0 : cut;
  m.breakpoints = {cut};
  if (!one_sided) m.lipschitz_rule = power_lipschitz_rule(M, alpha, 0.0);
  const double sides = one_sided ? 1.0 : 2.0;
  m.closed_forms.lambda = [=](double a) {
    return a >= cut ? 0.0 : sides * M * (std::pow(a, -alpha) - std::pow(cut, -alpha)) / alpha;
  };
  m.closed_forms.sigma2 = [=](double a) { return sides * M * std::pow(std::min(a, cut), 2.0 - alpha) / (2.0 - alpha); };
  if (!one_sided) {
    m.closed_forms.drift = [](double) { return 0.0; };
  } else {
    auto F = [alpha](double x) { return alpha == 1.0 ? std::log(x) : std::pow(x, 1.0 - alpha) / (1.0 - alpha); };
    if (alpha < 1.0) {
      m.closed_forms.drift = [=](double e) { return M * F(std::min(e, cut)); };
    } else {
      m.closed_forms.drift = [=](double e) {
        const double a = std::min(e, cut), b = std::min(1.0, cut);
        return e < 1.0 ? -M * (F(b) - F(a)) : M * (F(a) - F(b));
      };
    }
  }
  return m;
}

namespace {

// Integral of x^k g(x) over x in [lo, hi] for a piecewise-constant law.
double pc_moment(const PiecewiseConstantJump& pc, int k, double lo, double hi) {
  double s = 0.0;
  for (std::size_t i = 0; i < pc.weights.size(); ++i) {
    const double a = std::max(lo, pc.edges[i]);
    const double b = std::min(hi, pc.edges[i + 1]);
    if (!(b > a)) continue;
    const double dens = pc.weights[i] / (pc.edges[i + 1] - pc.edges[i]);
    s += dens * (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
  }
  return s;
}

}  // namespace

LevyModel make_cpp(double rate, const JumpLaw& law, double class_alpha) {
  if (!std::holds_alternative<PiecewiseConstantJump>(law)) {
    raise(ErrorCode::UnsupportedJumpLaw, "cpp models need a jump law with a density");
  }
  if (!(rate > 0.0)) raise(ErrorCode::InvalidArgument, "cpp rate must be positive");
  const auto pc = std::get<PiecewiseConstantJump>(law);
  LevyModel m;
  m.name = "cpp";
  m.kind = ModelKind::cpp;
  m.params = {{"lambda", rate}};
  m.jump_law = law;
  m.jump_rate = rate;
  m.density = [rate, law](double x) { return x == 0.0 ? 0.0 : rate * jump_density(law, x); };
  m.support_pos = std::max(0.0, pc.edges.back());
  m.support_neg = std::max(0.0, -pc.edges.front());
  for (double e : pc.edges) {
    if (e != 0.0) m.breakpoints.push_back(std::abs(e));
  }
  bool sym = pc.edges.size() == pc.weights.size() + 1;
  const std::size_t n = pc.weights.size();
  for (std::size_t i = 0; sym && i < pc.edges.size(); ++i) sym = pc.edges[i] == -pc.edges[pc.edges.size() - 1 - i];
  for (std::size_t i = 0; sym && i < n; ++i) sym = pc.weights[i] == pc.weights[n - 1 - i];
  m.symmetric = sym;
  m.variation = Variation::finite;
  m.class_alpha = class_alpha;
  double cm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dens = rate * pc.weights[i] / (pc.edges[i + 1] - pc.edges[i]);
    if (dens == 0.0) continue;
    const double a = pc.edges[i], b = pc.edges[i + 1];
    double reach = 0.0;
    if (b <= 0.0) reach = std::min(-a, 2.0);
    else if (a >= 0.0) reach = std::min(b, 2.0);
    else reach = std::min(std::max(-a, b), 2.0);
    if ((a >= 0.0 && a >= 2.0) || (b <= 0.0 && -b >= 2.0)) continue;
    cm = std::max(cm, dens * std::pow(reach, 1.0 + class_alpha));
  }
  m.class_M = cm > 0.0 ? cm : 1.0;
  m.global_M = rate * jump_density_sup(law);
  m.closed_forms.lambda = [rate, law](double a) { return rate * jump_tail(law, a); };
  m.closed_forms.sigma2 = [rate, pc](double a) { return rate * (pc_moment(pc, 2, -a, a)); };
  m.closed_forms.drift = [rate, pc](double e) { return rate * pc_moment(pc, 1, -e, e); };
  m.closed_forms.tail = [rate, law](double eps, double t) { return cpp_exact_tail(rate, law, eps, t).prob; };
  return m;
}

std::string_view to_string(Variation v) { return v == Variation::finite ? "finite" : "infinite"; }

std::string_view to_string(ModelKind k) {
  switch (k) {
    case ModelKind::custom: return "custom";
    case ModelKind::cauchy: return "cauchy";
    case ModelKind::gamma: return "gamma";
    case ModelKind::inverse_gaussian: return "inverse_gaussian";
    case ModelKind::stable: return "stable";
    case ModelKind::tempered_stable: return "tempered_stable";
    case ModelKind::power_law: return "power_law";
    case ModelKind::cpp: return "cpp";
    case ModelKind::discontinuous: return "discontinuous";
  }
  return "custom";
}

}  // namespace levytail
