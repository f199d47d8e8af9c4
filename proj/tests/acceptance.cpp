// Acceptance runner: one PASS/FAIL line per criterion.
//   levytail_acceptance [--only NAME]
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "constants_oracle.hpp"
#include "levytail/bounds.hpp"
#include "levytail/closed_forms.hpp"
#include "levytail/constants.hpp"
#include "levytail/errors.hpp"
#include "levytail/harness.hpp"

using namespace levytail;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

// ===== 1. constants =====

Outcome constants_oracle() {
  const double alphas[] = {0.1, 0.25, 0.5, 0.75, 0.9, 1.0, 1.25, 1.5, 1.75, 1.9};
  double worst = 0.0;
  std::string worst_at;
  int compared = 0;
  bool keys_ok = true;
  for (double a : alphas) {
    for (std::optional<double> M : {std::optional<double>{}, std::optional<double>{0.5}, std::optional<double>{2.0}}) {
      for (std::optional<double> eps : {std::optional<double>{}, std::optional<double>{0.5}, std::optional<double>{1.5}}) {
        const ConstantsTable lib = constants(a, M, eps);
        const auto ref = oracle::constants(a, M, eps);
        if (lib.entries.size() != ref.size()) keys_ok = false;
        for (const auto& [name, want] : ref) {
          if (!lib.has(name)) {
            keys_ok = false;
            continue;
          }
          const double e = rel_err(lib.at(name), want);
          ++compared;
          if (e > worst) {
            worst = e;
            worst_at = fmt("%s(alpha=%g)", name.c_str(), a);
          }
        }
      }
    }
  }
  return {keys_ok && worst <= 1e-12,
          fmt("%d comparisons, max rel err %.3g at %s, key sets %s", compared, worst, worst_at.c_str(),
              keys_ok ? "match" : "differ")};
}

// ===== 2. functionals =====

Outcome functional_accuracy() {
  const LevyModel models[] = {make_cauchy(), make_gamma(), make_power_law(1.0, 0.5, 2.0),
                              make_power_law(1.0, 1.5, 2.0), make_power_law(1.0, 0.5, 2.0, true),
                              make_power_law(0.8, 1.5, 2.0, true)};
  double worst = 0.0;
  std::string worst_at;
  int n = 0;
  for (const auto& m : models) {
    for (double a : log_grid(1e-3, 2.0, 30)) {
      const double got[] = {lambda(m, a, Method::quadrature).value, sigma2(m, a, Method::quadrature).value,
                            drift_b(m, a, Method::quadrature).value};
      const double want[] = {m.closed_forms.lambda(a), m.closed_forms.sigma2(a), m.closed_forms.drift(a)};
      const char* names[] = {"lambda", "sigma2", "b"};
      for (int k = 0; k < 3; ++k) {
        const double e = rel_err(got[k], want[k]);
        ++n;
        if (e > worst) {
          worst = e;
          worst_at = fmt("%s %s(%g)", m.name.c_str(), names[k], a);
        }
      }
    }
  }
  return {worst <= 1e-8, fmt("%d values, max rel err %.3g at %s", n, worst, worst_at.c_str())};
}

// ===== 3. class bounds =====

Outcome class_bound_domination() {
  const LevyModel models[] = {make_cauchy(),
                              make_gamma(),
                              make_inverse_gaussian(),
                              make_stable(1.2, 0.5),
                              make_tempered_stable(0.7, 1.0),
                              make_power_law(1.0, 0.5, 2.0),
                              make_power_law(1.0, 1.5, 2.0),
                              make_power_law(1.0, 0.5, 2.0, true),
                              make_cpp(2.0, symmetric_uniform_jump(0.2, 1.5)),
                              discontinuous_example(1.5, 1.0, 0.05, 0.145)};
  int members = 0, checks = 0, violations = 0;
  double worst = 0.0;
  for (const auto& m : models) {
    if (!verify_class_membership(m, 400).pass) continue;
    ++members;
    for (double x : log_grid(1e-3, 2.0, 50)) {
      const ClassBounds cb = class_functional_bounds(m.class_M, m.class_alpha, x);
      std::vector<std::pair<double, double>> pairs = {
          {sigma2(m, x, Method::quadrature).value / (x * x), cb.sigma2_over_x2_ub},
          {lambda_band(m, x, 2.0, Method::quadrature).value, cb.lambda_ub}};
      if (cb.b_ub && m.variation == Variation::finite) {
        pairs.emplace_back(std::abs(drift_b(m, x, Method::quadrature).value), *cb.b_ub);
      }
      for (auto [v, ub] : pairs) {
        ++checks;
        worst = std::max(worst, v / ub);
        if (v > ub * (1.0 + 1e-12)) ++violations;
      }
    }
  }
  return {violations == 0 && members >= 8,
          fmt("%d member models, %d checks, %d violations, max functional/bound %.4f", members, checks, violations,
              worst)};
}

// ===== 4-5. rates =====

Outcome slope_within(const std::string& label, const ResidualCurve& curve, double want, double tol) {
  const RateFit f = fit_rate(curve);
  return {std::abs(f.slope - want) <= tol,
          fmt("%s slope %.4f (target %.3g +- %.3g, r2 %.6f, %d points)", label.c_str(), f.slope, want, tol, f.r2,
              f.points_used)};
}

Outcome cauchy_rate() {
  return slope_within("cauchy eps=1", residual_curve(make_cauchy(), 1.0, default_t_grid(1e-4, 1e-2), {}), 3.0, 0.05);
}

Outcome fv_rates() {
  const auto grid = default_t_grid(1e-3, 1e-1);
  std::vector<Outcome> parts;
  parts.push_back(slope_within("gamma", residual_curve(make_gamma(), 1.0, grid, {}), 2.0, 0.25));
  parts.push_back(slope_within("IG", residual_curve(make_inverse_gaussian(), 1.0, grid, {}), 2.0, 0.25));
  parts.push_back(
      slope_within("cpp", residual_curve(make_cpp(2.0, symmetric_uniform_jump(0.2, 1.5)), 1.0, grid, {}), 2.0, 0.1));
  // Jumps uniform on [3eps/4, eps]: one jump never exceeds eps, two always do.
  const double eps = 1.0, rate = 1.5, t = 1e-3;
  const double by_formula = smalljump_exact_cpp(rate, eps, t);
  const double by_convolution = cpp_exact_tail(rate, uniform_jump(0.75 * eps, eps), eps, t).prob;
  const double ratio = by_formula / (t * t) / (rate * rate / 2.0);
  const bool routes_agree = rel_err(by_convolution, by_formula) <= 1e-6;
  parts.push_back({std::abs(ratio - 1.0) <= 0.01 && routes_agree,
                   fmt("sharp cpp P/t^2 / (lambda^2/2) = %.6f, formula vs convolution rel diff %.2g", ratio,
                       rel_err(by_convolution, by_formula))});
  Outcome out{true, ""};
  for (const auto& p : parts) {
    out.pass = out.pass && p.pass;
    out.detail += (out.detail.empty() ? "" : "; ") + p.detail;
  }
  return out;
}

// ===== 6-7. domination =====

std::string summarize(const std::string& label, const ValidationReport& r) {
  double min_margin = INFINITY;
  for (const auto& row : r.rows) {
    if (row.applicable) min_margin = std::min(min_margin, row.margin);
  }
  return fmt("%s: %d PASS, %d FAIL, %d skipped, min margin %.3g", label.c_str(), r.passes, r.fails, r.skipped,
             min_margin);
}

Outcome domination_closed_form() {
  const LevyModel cauchy = make_cauchy();
  ValidateConfig cf;
  cf.eps_grid = {0.5, 1.0, 2.0};
  cf.checks = {{Theorem::lambda2bis, std::nullopt}, {Theorem::lambda2, 128.0 / (27.0 * std::numbers::pi)}};
  const auto closed = validate_bounds(cauchy, cf);
  // The small-jump theorem bounds P(|M_t| >= eps), which has no closed form.
  ValidateConfig sj;
  sj.eps_grid = {0.5, 1.0};
  sj.checks = {{Theorem::ps2, std::nullopt}};
  sj.truth.kind = TruthKind::mc;
  sj.truth.n = 20000;
  sj.truth.jump_budget = 20.0;
  const auto mc = validate_bounds(cauchy, sj);
  return {closed.ok() && mc.ok() && closed.passes == 72 && mc.passes == 24,
          summarize("lambda2bis+lambda2 closed form", closed) + "; " + summarize("ps2 MC n=2e4", mc)};
}

Outcome domination_mc() {
  ValidateConfig cfg;
  cfg.eps_grid = {0.25, 0.5, 1.0};
  cfg.points = 8;
  cfg.truth.kind = TruthKind::mc;
  cfg.truth.n = 1000000;
  cfg.truth.confidence = 0.99;
  cfg.truth.method = CiMethod::clopper_pearson;
  cfg.truth.jump_budget = 20.0;
  cfg.checks = {{Theorem::teo1, std::nullopt}};
  const auto fv = validate_bounds(make_power_law(1.0, 0.5, 2.0), cfg);
  cfg.checks = {{Theorem::ps2, std::nullopt}, {Theorem::lambda2bis, std::nullopt}};
  const auto iv = validate_bounds(make_power_law(1.0, 1.5, 2.0), cfg);
  const bool pass = fv.ok() && iv.ok() && fv.passes == 24 && iv.passes == 48;
  return {pass, summarize("alpha=0.5 teo1", fv) + "; " + summarize("alpha=1.5 ps2+lambda2bis", iv)};
}

// ===== 8. discontinuous example =====

Outcome discontinuous_rate() {
  const double alpha = 1.5, eps = 1.0;
  const LevyModel m = discontinuous_example(alpha, eps, 0.05, 0.145);
  const double t_max = bound_cdf_iv_general(m, eps, 1e-9).t_max;
  const double hi = std::min(0.1, t_max / 1.0001);
  TruthSpec truth;
  truth.kind = TruthKind::mc;
  truth.n = 10000000;
  truth.confidence = 0.99;
  truth.method = CiMethod::clopper_pearson;
  truth.gaussian_refinement = true;
  truth.delta_scale = 0.1;
  const auto curve = residual_curve(m, eps, log_grid(0.02, hi, 8), truth, Quantity::increment, Theorem::lambda2bis);
  const RateFit f = fit_rate(curve);
  const double target = 1.0 + 1.0 / alpha;
  return {std::abs(f.slope - target) <= 0.25 && f.slope < 1.95,
          fmt("slope %.4f over t in [%.3g, %.3g] (%d usable points, r2 %.4f), target %.4f +- 0.25, below 1.95",
              f.slope, f.t_lo, f.t_hi, f.points_used, f.r2, target)};
}

// ===== 9. Chernoff refinement =====

Outcome chernoff_refinement() {
  const LevyModel m = make_power_law(1.0, 0.5, 2.0);
  const double eps = 0.5;
  const double s2 = sigma2(m, eps).value;
  const double t_max = eps * eps / s2;  // domain of the refined form
  double min_ratio = INFINITY, max_ratio = 0.0;
  std::optional<double> crossover;
  bool below_from_start = true;
  for (double t : log_grid(1e-6, t_max, 61)) {
    const double refined = chernoff_refined_one_sided(s2, eps, t, eps);
    const double markov = markov_baseline(s2, eps, t);
    const double r = refined / markov;
    min_ratio = std::min(min_ratio, r);
    max_ratio = std::max(max_ratio, r);
    if (r < 1.0 && below_from_start) crossover = t;
    else below_from_start = false;
  }
  const bool refined_beats = crossover.has_value();

  // MC half: P(M_t > eps) is half of P(|M_t| > eps) by symmetry of the model.
  TruthSpec truth;
  truth.kind = TruthKind::mc;
  truth.n = 1000000;
  truth.confidence = 0.99;
  truth.method = CiMethod::clopper_pearson;
  truth.jump_budget = 20.0;
  int points = 0, exceed = 0;
  for (double t : log_grid(1e-3, t_max / 1.0001, 8)) {
    const CurvePoint p = truth_point(m, eps, t, truth, Quantity::small_jumps, static_cast<std::uint32_t>(points));
    const double lo_one_sided = p.truth_ci->lo / 2.0;
    const double bound = chernoff_small_jumps(s2, eps, t, eps, false).value;
    ++points;
    if (lo_one_sided > bound) ++exceed;
  }
  return {refined_beats && exceed == 0,
          fmt("refined/Markov ratio in [%.4f, %.4f] on t in [1e-6, %.3g], crossover %s; MC: %d/%d points above the "
              "Chernoff band",
              min_ratio, max_ratio, t_max, refined_beats ? fmt("%.3g", *crossover).c_str() : "none", exceed, points)};
}

// ===== 10. determinism =====

std::string outputs(int shards) {
  const LevyModel m = make_power_law(1.0, 1.5, 2.0);
  TruthSpec truth;
  truth.kind = TruthKind::mc;
  truth.n = 20000;
  truth.shards = shards;
  truth.seed = 2024;
  truth.jump_budget = 20.0;
  const auto curve = residual_curve(m, 0.5, log_grid(1e-3, 1e-2, 4), truth, Quantity::increment, Theorem::lambda2bis);
  ValidateConfig cfg;
  cfg.eps_grid = {0.5};
  cfg.points = 3;
  cfg.truth = truth;
  cfg.checks = {{Theorem::ps2, std::nullopt}};
  const auto rep = validate_bounds(m, cfg);
  std::ostringstream os;
  os << curve_csv(curve) << validation_csv(rep) << validation_json(rep);
  for (const auto& p : curve.points) os << estimate_json(*p.estimate);
  try {
    os << rate_json(curve, fit_rate(curve));
  } catch (const LevyError& e) {
    os << e.what();
  }
  return os.str();
}

Outcome determinism() {
  const std::string ref = outputs(1);
  int mismatches = 0, runs = 0;
  for (int shards : {1, 4, 16}) {
    for (int rep = 0; rep < 2; ++rep) {
      ++runs;
      if (outputs(shards) != ref) ++mismatches;
    }
  }
  return {mismatches == 0, fmt("%d runs over shards {1,4,16} vs reference (%zu bytes), %d mismatches", runs,
                               ref.size(), mismatches)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion all[] = {
      {"constants_oracle", constants_oracle},
      {"functional_accuracy", functional_accuracy},
      {"class_bound_domination", class_bound_domination},
      {"cauchy_rate", cauchy_rate},
      {"fv_rates", fv_rates},
      {"domination_closed_form", domination_closed_form},
      {"domination_mc", domination_mc},
      {"discontinuous_rate", discontinuous_rate},
      {"chernoff_refinement", chernoff_refinement},
      {"determinism", determinism},
  };
  std::string only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--only NAME]\n", argv[0]);
      return 2;
    }
  }
  int failed = 0, ran = 0;
  for (const auto& c : all) {
    if (!only.empty() && only != c.name) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  if (ran == 0) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
