#include "levytail/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "levytail/errors.hpp"

namespace levytail {
namespace {

constexpr double kInvE = 1.0 / std::numbers::e;

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) raise(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
}

void require_unit_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) raise(ErrorCode::InvalidCutoff, "eps must lie in (0,1]");
}

void clamp_probability(BoundResult& r) {
  r.constants_used["raw_value"] = r.value;
  r.value = std::clamp(r.value, 0.0, 1.0);
}

double plain(const LevyModel& m, double a) { return a > 0.0 ? lambda(m, a).value : kInf; }

}  // namespace

std::string_view to_string(Theorem th) {
  switch (th) {
    case Theorem::lemma_sj: return "lemma_sj";
    case Theorem::lemma_sj_gauss: return "lemma_sj_gauss";
    case Theorem::ps1: return "ps1";
    case Theorem::teo1: return "teo1";
    case Theorem::ps2: return "ps2";
    case Theorem::lambda2bis: return "lambda2bis";
    case Theorem::lambda2: return "lambda2";
    case Theorem::corollary: return "corollary";
    case Theorem::markov: return "markov";
    case Theorem::ccpp: return "ccpp";
  }
  return "markov";
}

std::optional<Theorem> theorem_from_string(std::string_view s) {
  for (Theorem th : {Theorem::lemma_sj, Theorem::lemma_sj_gauss, Theorem::ps1, Theorem::teo1, Theorem::ps2,
                     Theorem::lambda2bis, Theorem::lambda2, Theorem::corollary, Theorem::markov, Theorem::ccpp}) {
    if (to_string(th) == s) return th;
  }
  return std::nullopt;
}

double BoundOptions::scaled(const std::string& name, double value) const {
  auto it = constant_scale.find(name);
  if (it != constant_scale.end()) return value * it->second;
  it = constant_scale.find("*");
  return it == constant_scale.end() ? value : value * it->second;
}

// ===== concentration =====

double chernoff_general_one_sided(double sigma2, double eps, double t, double x) {
  const double ts = t * sigma2;
  if (ts == 0.0) return 0.0;
  const double s = x * eps + ts;
  return std::exp(x / eps + (s / (eps * eps)) * std::log(ts / s));
}

double chernoff_refined_one_sided(double sigma2, double eps, double t, double x) {
  if (sigma2 == 0.0) return 0.0;
  const double k = x / eps;
  return std::exp(k * (1.0 + std::log(sigma2 / (eps * eps))) + kInvE + k * std::log(t));
}

BoundResult chernoff_small_jumps(double sigma2, double eps, double t, double x, bool two_sided) {
  require_unit_eps(eps);
  require_positive(t, "t");
  require_positive(x, "x");
  if (sigma2 < 0.0) raise(ErrorCode::InvalidArgument, "sigma2 must be nonnegative");
  BoundResult r;
  r.theorem = Theorem::lemma_sj;
  r.rate_exponent = x / eps;
  if (sigma2 == 0.0) {
    r.value = 0.0;
    r.notes.emplace_back("DegenerateSigma: no small-jump mass, bound is 0");
    r.constants_used["raw_value"] = 0.0;
    return r;
  }
  const double general = chernoff_general_one_sided(sigma2, eps, t, x);
  double one = general;
  r.constants_used["general_one_sided"] = general;
  if (t * sigma2 / (eps * eps) <= 1.0) {
    const double refined = chernoff_refined_one_sided(sigma2, eps, t, x);
    r.constants_used["refined_one_sided"] = refined;
    one = std::min(one, refined);
  }
  r.value = two_sided ? 2.0 * one : one;
  clamp_probability(r);
  return r;
}

BoundResult chernoff_with_gaussian(double sigma2, double Sigma, double eps, double t, double x) {
  if (Sigma < 0.0) raise(ErrorCode::InvalidArgument, "Sigma must be nonnegative");
  if (Sigma == 0.0) {
    BoundResult r = chernoff_small_jumps(sigma2, eps, t, x, false);
    r.theorem = Theorem::lemma_sj_gauss;
    r.constants_used["gauss_factor"] = 1.0;
    return r;
  }
  require_unit_eps(eps);
  require_positive(t, "t");
  require_positive(x, "x");
  if (!(sigma2 > 0.0)) raise(ErrorCode::DegenerateSigma, "sigma2 = 0 with a Gaussian part is not supported");
  BoundResult r;
  r.theorem = Theorem::lemma_sj_gauss;
  r.rate_exponent = x / eps;
  const double l = std::log1p(x * eps / (t * sigma2));
  const double factor = std::exp(t * Sigma * Sigma / (2.0 * eps * eps) * l * l);
  const double general = chernoff_general_one_sided(sigma2, eps, t, x);
  r.constants_used["general_one_sided"] = general;
  r.constants_used["gauss_factor"] = factor;
  r.constants_used["gauss_factor_majorant"] = std::exp(Sigma * Sigma * x / (2.0 * eps * sigma2));
  r.value = general * factor;
  clamp_probability(r);
  return r;
}

double markov_baseline(double sigma2, double eps, double t) {
  require_positive(eps, "eps");
  require_positive(t, "t");
  if (sigma2 < 0.0) raise(ErrorCode::InvalidArgument, "sigma2 must be nonnegative");
  return std::min(1.0, t * sigma2 / (eps * eps));
}

// ===== theorems =====

BoundResult bound_smalljump_fv(double M, double alpha, double eps, double t, bool symmetric,
                               const BoundOptions& opts) {
  if (!(alpha > 0.0 && alpha < 1.0)) raise(ErrorCode::AlphaOutOfRange, "ps1 requires alpha in (0,1)");
  require_positive(M, "M");
  require_unit_eps(eps);
  require_positive(t, "t");
  BoundResult r;
  r.theorem = Theorem::ps1;
  r.rate_exponent = 2.0;
  const double ea = std::pow(eps, alpha);
  if (symmetric) {
    const double C2 = opts.scaled("C2", const_C2(alpha));
    r.constants_used["C2"] = C2;
    r.value = 2.0 * t * t * M * M * C2 / (ea * ea);
    r.t_max = ea * (2.0 - alpha) / (M * std::pow(2.0, alpha + 1.0));
  } else {
    const double C1 = opts.scaled("C1", const_C1(alpha));
    r.constants_used["C1"] = C1;
    r.value = 2.0 * t * t * M * M * C1 / (ea * ea);
    r.t_max = (1.0 - alpha) * ea / (M * std::pow(4.0, 1.0 + alpha));
  }
  r.valid = t <= r.t_max;
  clamp_probability(r);
  return r;
}

BoundResult bound_cdf_fv(const LevyModel& model, double eps, double t, const BoundOptions& opts) {
  if (!model.variation) raise(ErrorCode::UndeclaredVariation, "model variation must be declared");
  if (*model.variation != Variation::finite) raise(ErrorCode::WrongVariation, "teo1 requires a finite-variation model");
  const double a = model.class_alpha;
  if (!(a > 0.0 && a < 1.0)) raise(ErrorCode::AlphaOutOfRange, "teo1 requires alpha in (0,1)");
  require_positive(eps, "eps");
  require_positive(t, "t");
  BoundResult r;
  r.theorem = Theorem::teo1;
  r.rate_exponent = 2.0;
  auto& cu = r.constants_used;
  double M = model.class_M;
  if (eps > 1.0) {
    if (!model.global_M) raise(ErrorCode::MissingGlobalM, "eps > 1 requires global_M");
    M = std::max(M, *model.global_M);
  }
  cu["M"] = M;
  const double t2 = t * t;
  if (model.symmetric) {
    const double C2 = opts.scaled("C2", const_C2(a));
    cu["C2"] = C2;
    if (eps <= 1.0) {
      const double D3 = opts.scaled("D3", const_D3(a));
      const double le = plain(model, eps), l2e = plain(model, 2.0 * eps);
      const double ema = std::pow(eps, -a);
      cu["D3"] = D3;
      cu["lambda_eps"] = le;
      cu["lambda_2eps"] = l2e;
      r.value = 2.0 * t2 * M * M * ema * ema * (C2 + D3) + t2 * M / (2.0 * (2.0 - a)) * (le * ema + 4.0 * l2e * ema) +
                2.0 * t2 * le * le;
      r.t_max = std::pow(eps, a) * (2.0 - a) / (M * std::pow(2.0, a + 1.0));
    } else {
      const double l1 = plain(model, 1.0), l1e = plain(model, 1.0 + eps);
      cu["lambda_1"] = l1;
      cu["lambda_1_plus_eps"] = l1e;
      r.value = 2.0 * t2 * M * M * C2 + t2 * M / (2.0 - a) * (l1 * std::pow(2.0, -a) + 4.0 * M / (a * (1.0 - a)) + l1e) +
                2.0 * t2 * l1 * l1;
      r.t_max = (2.0 - a) / (M * std::pow(2.0, a + 1.0));
    }
  } else {
    const double C1 = opts.scaled("C1", const_C1(a));
    cu["C1"] = C1;
    if (eps <= 1.0) {
      const double D1 = opts.scaled("D1", const_D1(a)), D2 = opts.scaled("D2", const_D2(a));
      const double le = plain(model, eps);
      const double ema = std::pow(eps, -a);
      cu["D1"] = D1;
      cu["D2"] = D2;
      cu["lambda_eps"] = le;
      r.value = t2 * M * M * ema * ema * (2.0 * C1 + D1) + t2 * M * le * ema * D2 + 2.0 * t2 * le * le;
      r.t_max = (1.0 - a) * std::pow(eps, a) / (M * std::pow(4.0, 1.0 + a));
    } else {
      const double tD1 = opts.scaled("tildeD1", const_tildeD1(a));
      const double l1 = plain(model, 1.0), l2 = plain(model, 2.0);
      const double b1 = std::abs(drift_b(model, 1.0).value);
      cu["tildeD1"] = tD1;
      cu["lambda_1"] = l1;
      cu["lambda_2"] = l2;
      cu["abs_b1"] = b1;
      const double far = eps > 1.5 + t * b1 ? 4.0 / (2.0 - a) * (eps - 1.5 - t * b1) : 0.0;
      const double near = (eps > 1.0 && eps < 1.0 + 2.0 * t * b1) ? 4.0 * std::pow(5.0, a) : 0.0;
      r.value = 2.0 * M * M * t2 * (tD1 + C1) + 2.0 * t2 * l1 * l1 + 2.0 * M * t2 * far +
                M * t2 * (near + 8.0 / 5.0 + 1.5 * l2 + 4.0 * l1 / (2.0 - a));
      r.t_max = (1.0 - a) / (5.0 * M);
      r.notes.emplace_back("lambda_2 coefficient 3/2 as in the theorem statement");
    }
  }
  r.valid = t < r.t_max;
  return r;
}

BoundResult bound_smalljump_iv(double M, double alpha, double eps, double t, bool two_sided,
                               const BoundOptions& opts) {
  if (!(alpha >= 1.0 && alpha < 2.0)) raise(ErrorCode::AlphaOutOfRange, "ps2 requires alpha in [1,2)");
  require_positive(M, "M");
  require_unit_eps(eps);
  require_positive(t, "t");
  BoundResult r;
  r.theorem = Theorem::ps2;
  const double t2 = t * t;
  if (alpha > 1.0) {
    const double E1 = opts.scaled("E1", const_E1(alpha));
    r.constants_used["E1"] = E1;
    r.rate_exponent = 1.0 + 1.0 / alpha;
    r.value = std::pow(2.0, 2.0 + alpha) * M * std::pow(t, 1.0 + 1.0 / alpha) * std::pow(eps, -(1.0 + alpha)) *
                  (1.0 + M / (alpha * (2.0 - alpha) * (alpha - 1.0))) +
              2.0 * t2 * M * M * E1 * std::pow(eps, -2.0 * alpha);
  } else {
    const double e2 = eps * eps;
    r.rate_exponent = 2.0;
    const double k = opts.scaled("ps2_alpha1", std::exp(2.0 + kInvE) + 37.0 / 9.0);
    r.constants_used["ps2_alpha1"] = k;
    double v = 4.0 * t2 * M * M / e2 * k + 4.0 * M * t2 / e2 + 16.0 * M * M / e2 * t2 * std::log(eps / (2.0 * t));
    if (two_sided) v *= 2.0;
    r.value = v;
    r.notes.emplace_back(two_sided ? "alpha=1 branch doubled to the two-sided probability"
                                   : "alpha=1 branch bounds the one-sided probability");
  }
  r.t_max = std::pow(eps / 2.0, alpha) * std::min(1.0, (2.0 - alpha) / (2.0 * M));
  r.valid = t < r.t_max;
  clamp_probability(r);
  return r;
}

BoundResult bound_cdf_iv_general(const LevyModel& model, double eps, double t, const BoundOptions& opts) {
  if (!model.symmetric) raise(ErrorCode::NotSymmetric, "lambda2bis requires a symmetric model");
  const double a = model.class_alpha;
  if (!(a >= 1.0 && a < 2.0)) raise(ErrorCode::AlphaOutOfRange, "lambda2bis requires alpha in [1,2)");
  if (!model.global_M) raise(ErrorCode::MissingGlobalM, "lambda2bis requires global_M");
  require_positive(eps, "eps");
  require_positive(t, "t");
  const double M = std::max(model.class_M, *model.global_M);
  BoundResult r;
  r.theorem = Theorem::lambda2bis;
  r.rate_exponent = a > 1.0 ? 1.0 + 1.0 / a : 2.0;
  auto& cu = r.constants_used;
  const double G1 = opts.scaled("G1", const_G1(a, M));
  const double G2 = opts.scaled("G2", const_G2(a, M));
  const double C = const_C(a, M);
  const double rho = std::min(eps, 1.0);
  const double l1 = plain(model, 1.0), lr = plain(model, rho);
  cu["M"] = M;
  cu["G1"] = G1;
  cu["G2"] = G2;
  cu["C"] = C;
  cu["lambda_1"] = l1;
  cu["lambda_rho"] = lr;
  const double t2 = t * t;
  double v = G1 * std::pow(t, 1.0 + 1.0 / a) / std::pow(rho, 1.0 + a) + G2 * t2 / std::pow(rho, 2.0 * a) +
             5.0 * M / (2.0 - a) * t2 * l1 / (rho * rho) + 2.0 * lr * lr * t2;
  if (eps > 2.0) v += 4.0 * M * M * t2 * eps / (2.0 - a);
  if (a == 1.0) {
    const double arg = std::min({1.0, eps, std::max(eps - 1.0, 0.0)});
    // 0 ln 0 = 0, and the logarithm only enters through an integral over (t/C, arg).
    const double log1 = arg > 0.0 ? std::max(0.0, std::log(C * arg / t)) : 0.0;
    const double log2 = std::log(eps / (2.0 * t));
    cu["log_term_1"] = log1;
    cu["log_term_2"] = log2;
    v += M * M * t2 * (12.0 / rho * log1 + 16.0 / (eps * eps) * log2);
  }
  r.value = v;
  r.t_max = std::pow(rho / 2.0, a) * std::min(1.0, (2.0 - a) / (2.0 * M));
  r.valid = t < r.t_max;
  return r;
}

BoundResult bound_cdf_iv_lipschitz(const LevyModel& model, double eps, double t, std::optional<double> lipschitz_M,
                                   const BoundOptions& opts) {
  if (!model.symmetric) raise(ErrorCode::NotSymmetric, "lambda2 requires a symmetric model");
  const double a = model.class_alpha;
  if (!(a >= 1.0 && a < 2.0)) raise(ErrorCode::AlphaOutOfRange, "lambda2 requires alpha in [1,2)");
  require_positive(eps, "eps");
  require_positive(t, "t");
  double M = model.class_M;
  if (lipschitz_M) {
    if (!(*lipschitz_M >= model.class_M)) {
      raise(ErrorCode::InvalidArgument, "lipschitz_M must be at least class_M");
    }
    M = *lipschitz_M;
  }
  const auto cert = model.lipschitz_for(eps);
  if (!cert) raise(ErrorCode::MissingLipschitzCert, "lambda2 requires a Lipschitz certificate");
  const double rho = std::min(eps, 1.0);
  const double lo = 0.75 * rho, hi = 2.0 * eps - 0.75 * rho;
  if (cert->lo > lo * (1.0 + 1e-12) || cert->hi < hi * (1.0 - 1e-12)) {
    raise(ErrorCode::MissingLipschitzCert, "Lipschitz certificate does not cover (3/4(eps^1), 2eps-3/4(eps^1))");
  }
  const double required = M * std::pow(rho, -(2.0 + a));
  if (cert->constant > required * (1.0 + 1e-12)) {
    raise(ErrorCode::CertTooWeak, "Lipschitz constant " + std::to_string(cert->constant) + " exceeds M(eps^1)^-(2+alpha) = " +
                                      std::to_string(required));
  }
  BoundResult r;
  r.theorem = Theorem::lambda2;
  r.rate_exponent = 2.0;
  auto& cu = r.constants_used;
  const double l1 = plain(model, 1.0);
  const double t2 = t * t;
  const double F5 = opts.scaled("F5", const_F5(a));
  cu["M"] = M;
  cu["lambda_1"] = l1;
  cu["F5"] = F5;
  cu["lipschitz_constant"] = cert->constant;
  double inner;
  if (eps <= 1.0) {
    const double F1 = opts.scaled("F1", const_F1(a)), F2 = opts.scaled("F2", const_F2(a, eps));
    cu["F1"] = F1;
    cu["F2"] = F2;
    inner = F1 * std::pow(eps, -2.0 * a) + l1 * std::pow(eps, -a) * F2;
  } else {
    const double F3 = opts.scaled("F3", const_F3(a, eps)), F4 = opts.scaled("F4", const_F4(a));
    cu["F3"] = F3;
    cu["F4"] = F4;
    inner = eps * eps * F3 + F4;
  }
  r.value = t2 * M * M * inner + 2.0 * t2 * l1 * l1 + t2 * t2 * std::pow(M, 4.0) * F5 / std::pow(rho, 4.0 * a);
  r.t_max = (2.0 - a) * std::pow(rho, a) / (std::pow(2.0, 1.0 + a) * M);
  r.valid = t <= r.t_max;
  return r;
}

// ===== corollary =====

BoundResult bound_stable_type(double M1, double M2, double a, double eps, double t, CorollaryVariant variant,
                              const CorollaryLambdas& lam, const BoundOptions& opts) {
  require_positive(M1, "M1");
  if (!(M2 >= M1)) raise(ErrorCode::InvalidArgument, "M2 must be at least M1");
  require_unit_eps(eps);
  require_positive(t, "t");
  if (!(lam.lambda_eps > 0.0)) raise(ErrorCode::InvalidArgument, "corollary requires lambda_eps > 0");
  BoundResult r;
  r.theorem = Theorem::corollary;
  auto& cu = r.constants_used;
  const double le = lam.lambda_eps;
  const double x = t * le;
  // Sound bracket for densities vanishing beyond 2: eps^{-alpha} <= kappa lambda_eps.
  const double kappa = a / (2.0 * M1 * (1.0 - std::pow(2.0, -a)));
  cu["kappa"] = kappa;
  cu["t_lambda_eps"] = x;
  const double M = M2;
  double window = 0.0, theorem_tmax = 0.0;
  bool theorem_ok = false;
  switch (variant) {
    case CorollaryVariant::fv: {
      if (!(a > 0.0 && a < 1.0)) raise(ErrorCode::AlphaOutOfRange, "fv corollary requires alpha in (0,1)");
      const double C2 = opts.scaled("C2", const_C2(a)), D3 = opts.scaled("D3", const_D3(a));
      const double A = 2.0 * M * M * kappa * kappa * (C2 + D3) + M * kappa * 5.0 / (2.0 * (2.0 - a)) + 2.0;
      cu["A"] = A;
      r.value = A * x * x;
      r.rate_exponent = 2.0;
      window = std::pow(2.0, -a) * (2.0 - a) / a;
      theorem_tmax = std::pow(eps, a) * (2.0 - a) / (M * std::pow(2.0, a + 1.0));
      theorem_ok = t < theorem_tmax;
      break;
    }
    case CorollaryVariant::iv_general: {
      if (!(a >= 1.0 && a < 2.0)) raise(ErrorCode::AlphaOutOfRange, "iv_general corollary requires alpha in [1,2)");
      window = std::pow(2.0, 1.0 - a) * M * std::min(1.0, (2.0 - a) / (2.0 * M)) / a;
      const double G1 = opts.scaled("G1", const_G1(a, M)), G2 = opts.scaled("G2", const_G2(a, M));
      const double e = 1.0 + 1.0 / a;
      const double xe = std::pow(x, e);
      // Absorbed terms: G1 t^e eps^{-(1+a)} and G2 t^2 eps^{-2a}, 2 lambda_eps^2 t^2 (x <= window).
      double B = G1 * std::pow(kappa, e) + (G2 * kappa * kappa + 2.0) * std::pow(window, 1.0 - 1.0 / a);
      // Remaining term 5M/(2-a) t^2 lambda_1 eps^{-2} with lambda_1 <= lambda_eps, eps^{-2} <= (kappa lambda_eps)^{2/a}.
      const double rest = 5.0 * M / (2.0 - a) * t * x * std::pow(kappa * le, 2.0 / a);
      double logf = 1.0;
      if (a == 1.0) {
        if (!(lam.lambda_eps_1 > 0.0)) raise(ErrorCode::InvalidArgument, "alpha = 1 corollary requires lambda_{eps,1} > 0");
        // eps <= 2 M2 / lambda_{eps,1} turns ln(eps/2t) into ln(Btilde/(lambda_eps t)).
        const double Bt = M * le / lam.lambda_eps_1;
        cu["B_tilde"] = Bt;
        logf = std::log(Bt / x);
        r.value = B * xe + 16.0 * M * M * t * t * kappa * kappa * le * le * std::max(logf, 0.0) + rest;
      } else {
        r.value = B * xe + rest;
      }
      cu["B"] = B;
      cu["nonabsorbed_term"] = rest;
      cu["B_effective"] = r.value / (xe * (a == 1.0 ? std::max(logf, 1e-300) : 1.0));
      r.rate_exponent = e;
      const double rho = eps;
      theorem_tmax = std::pow(rho / 2.0, a) * std::min(1.0, (2.0 - a) / (2.0 * M));
      theorem_ok = t < theorem_tmax;
      break;
    }
    case CorollaryVariant::iv_lipschitz: {
      if (!(a >= 1.0 && a < 2.0)) raise(ErrorCode::AlphaOutOfRange, "iv_lipschitz corollary requires alpha in [1,2)");
      window = std::pow(2.0, -a) * (2.0 - a) / a;
      const double F1 = opts.scaled("F1", const_F1(a)), F2 = opts.scaled("F2", const_F2(a, eps));
      const double F5 = opts.scaled("F5", const_F5(a));
      const double Cc = M * M * (F1 * kappa * kappa + F2 * kappa) + 2.0 + std::pow(M, 4.0) * F5 * std::pow(kappa, 4.0) * window * window;
      cu["C"] = Cc;
      r.value = Cc * x * x;
      r.rate_exponent = 2.0;
      theorem_tmax = (2.0 - a) * std::pow(eps, a) / (std::pow(2.0, 1.0 + a) * M);
      theorem_ok = t <= theorem_tmax;
      break;
    }
  }
  cu["window"] = window;
  cu["theorem_t_max"] = theorem_tmax;
  r.t_max = std::min(theorem_tmax, window / le);
  r.valid = x <= window && theorem_ok;
  if (x > window) r.notes.emplace_back("WindowViolated: t lambda_eps exceeds the corollary window");
  return r;
}

CorollaryLambdas corollary_lambdas(const LevyModel& model, double eps) {
  CorollaryLambdas l;
  l.lambda_eps = plain(model, eps);
  l.lambda_1 = plain(model, 1.0);
  l.lambda_eps_1 = eps < 1.0 ? lambda_band(model, eps, 1.0).value : 0.0;
  l.lambda_2eps = plain(model, 2.0 * eps);
  return l;
}

double ccpp_centering_gap(double lam, double mean_jump, double density_sup) {
  if (!(lam > 0.0 && lam <= 2.0)) raise(ErrorCode::LambdaOutOfRange, "ccpp requires 0 < lambda <= 2");
  if (density_sup < 0.0) raise(ErrorCode::InvalidArgument, "density_sup must be nonnegative");
  const double base = 2.0 * lam * std::exp(-lam) * std::abs(mean_jump) * density_sup;
  return lam <= 1.0 ? base : base * lam;
}

// ===== selection =====

BoundResult auto_select(const LevyModel& model, double eps, double t, const BoundOptions& opts) {
  std::vector<BoundResult> cands;
  auto attempt = [&](auto&& fn) {
    try {
      BoundResult r = fn();
      if (r.valid) cands.push_back(std::move(r));
    } catch (const LevyError&) {
    }
  };
  const double a = model.class_alpha;
  if (model.variation && *model.variation == Variation::finite && a < 1.0) {
    attempt([&] { return bound_cdf_fv(model, eps, t, opts); });
  }
  if (model.symmetric && a >= 1.0 && a < 2.0) {
    attempt([&] { return bound_cdf_iv_general(model, eps, t, opts); });
    attempt([&] { return bound_cdf_iv_lipschitz(model, eps, t, std::nullopt, opts); });
  }
  if (cands.empty()) raise(ErrorCode::NoApplicableBound, "no theorem applies at this (eps, t)");
  auto best = std::min_element(cands.begin(), cands.end(), [](const BoundResult& x, const BoundResult& y) {
    if (x.value != y.value) return x.value < y.value;
    return x.rate_exponent < y.rate_exponent;
  });
  return *best;
}

BoundResult bound_for(const LevyModel& model, Theorem th, double eps, double t, const BoundOptions& opts) {
  switch (th) {
    case Theorem::ps1:
      return bound_smalljump_fv(model.class_M, model.class_alpha, eps, t, model.symmetric, opts);
    case Theorem::teo1:
      return bound_cdf_fv(model, eps, t, opts);
    case Theorem::ps2:
      if (!model.symmetric) raise(ErrorCode::NotSymmetric, "ps2 requires a symmetric model");
      return bound_smalljump_iv(model.class_M, model.class_alpha, eps, t, true, opts);
    case Theorem::lambda2bis:
      return bound_cdf_iv_general(model, eps, t, opts);
    case Theorem::lambda2:
      return bound_cdf_iv_lipschitz(model, eps, t, std::nullopt, opts);
    case Theorem::corollary: {
      if (!model.symmetric) raise(ErrorCode::NotSymmetric, "corollary requires a symmetric model");
      double M1;
      if (auto it = model.params.find("M1"); it != model.params.end()) M1 = it->second;
      else if (model.kind == ModelKind::stable) M1 = model.params.at("scale");
      else if (model.kind == ModelKind::power_law) M1 = model.params.at("M");
      else raise(ErrorCode::InvalidArgument, "corollary needs a lower density constant M1");
      const double a = model.class_alpha;
      CorollaryVariant v = CorollaryVariant::fv;
      if (a >= 1.0) {
        v = CorollaryVariant::iv_general;
        if (model.lipschitz_for(eps)) {
          try {
            (void)bound_cdf_iv_lipschitz(model, eps, t, std::nullopt, opts);
            v = CorollaryVariant::iv_lipschitz;
          } catch (const LevyError&) {
          }
        }
      }
      return bound_stable_type(M1, model.class_M, a, eps, t, v, corollary_lambdas(model, eps), opts);
    }
    case Theorem::markov: {
      BoundResult r;
      r.theorem = Theorem::markov;
      r.rate_exponent = 1.0;
      const double s2 = sigma2(model, eps).value;
      r.constants_used["sigma2"] = s2;
      r.value = markov_baseline(s2, eps, t);
      return r;
    }
    case Theorem::lemma_sj:
      return chernoff_small_jumps(sigma2(model, eps).value, eps, t, eps, true);
    case Theorem::lemma_sj_gauss:
    case Theorem::ccpp:
      break;
  }
  raise(ErrorCode::InvalidArgument, std::string("theorem ") + std::string(to_string(th)) + " is not a model-level bound");
}

}  // namespace levytail
