#include "levytail/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "levytail/errors.hpp"

namespace levytail {

namespace {

using nlohmann::ordered_json;

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::increment: return "increment";
    case Quantity::small_jumps: return "small_jumps";
    case Quantity::small_jumps_drift: return "small_jumps_drift";
  }
  return "increment";
}

void require_grid(const std::vector<double>& g) {
  if (g.empty()) raise(ErrorCode::InvalidArgument, "t-grid must be non-empty");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g[i] > 0.0)) raise(ErrorCode::InvalidArgument, "t-grid must be positive");
    if (i > 0 && !(g[i] > g[i - 1])) raise(ErrorCode::InvalidArgument, "t-grid must be strictly increasing");
  }
}

double inner_cutoff(const LevyModel& model, double t, const TruthSpec& truth) {
  if (truth.delta_scale) {
    return std::min(1.0, *truth.delta_scale * std::pow(t * model.class_M, 1.0 / model.class_alpha));
  }
  return delta_for_jump_budget(model, t, truth.jump_budget);
}

// Shrinks delta until the remainder M_t(delta) admits a margin within the bias budget and, while the
// expected jump count stays below max_jumps, until the margin is at most max_margin * eps.
void certify(const LevyModel& model, double t, double eps, const TruthSpec& truth, SmallJumpScheme& scheme,
             EstimateOptions& eo) {
  for (int i = 0;; ++i) {
    const double s2 = sigma2(model, scheme.delta).value;
    if (s2 <= 0.0) return;
    bool ok = false;
    try {
      eo.margin = certify_margin(s2, scheme.delta, t, eps, scheme.bias_budget);
      eo.certified_bias = small_jump_exceedance_bound(s2, scheme.delta, t, eo.margin);
      ok = true;
    } catch (const LevyError&) {
      if (i >= 60) throw;
    }
    if (ok && eo.margin <= truth.max_margin * eps) return;
    const double next = 0.5 * scheme.delta;
    if (ok && t * lambda(model, next).value > truth.max_jumps) return;
    scheme.delta = next;
  }
}

// Residual of the truth against lambda t, with the CI mapped through |p - lambda t|.
void fill_residual(CurvePoint& p, double lt) {
  p.residual = std::abs(p.truth - lt);
  if (!p.truth_ci) {
    p.residual_lo = p.residual_hi = p.residual;
    return;
  }
  const double lo = p.truth_ci->lo, hi = p.truth_ci->hi;
  p.residual_lo = (lt >= lo && lt <= hi) ? 0.0 : std::min(std::abs(lo - lt), std::abs(hi - lt));
  p.residual_hi = std::max(std::abs(lo - lt), std::abs(hi - lt));
}

ordered_json bound_to_json(const BoundResult& r) {
  ordered_json j;
  j["theorem"] = std::string(to_string(r.theorem));
  j["value"] = r.value;
  j["t_max"] = r.t_max;
  j["valid"] = r.valid;
  j["rate_exponent"] = r.rate_exponent;
  ordered_json c = ordered_json::object();
  for (const auto& [k, v] : r.constants_used) c[k] = v;
  j["constants_used"] = c;
  j["notes"] = r.notes;
  return j;
}

std::string format17(double v);

// Like json::dump(2) but floats are printed with %.17g.
void write_json(std::ostringstream& os, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' '), close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object() || j.is_array()) {
    const bool obj = j.is_object();
    if (j.empty()) {
      os << (obj ? "{}" : "[]");
      return;
    }
    os << (obj ? "{\n" : "[\n");
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << pad;
      if (obj) os << ordered_json(it.key()).dump() << ": ";
      write_json(os, *it, indent + 2);
    }
    os << '\n' << close << (obj ? '}' : ']');
  } else if (j.is_number_float()) {
    const double v = j.get<double>();
    os << (std::isfinite(v) ? format17(v) : ordered_json(format17(v)).dump());
  } else {
    os << j.dump();
  }
}

std::string dump(const ordered_json& j) {
  std::ostringstream os;
  write_json(os, j, 0);
  os << '\n';
  return os.str();
}

}  // namespace

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi >= lo)) raise(ErrorCode::InvalidArgument, "log grid needs 0 < lo <= hi");
  if (points < 1) raise(ErrorCode::InvalidArgument, "log grid needs at least one point");
  if (points == 1) return {lo};
  std::vector<double> g(static_cast<std::size_t>(points));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (points - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> default_t_grid(double lo, double hi, int per_decade) {
  const double decades = std::log10(hi / lo);
  const int points = std::max(2, static_cast<int>(std::ceil(decades * per_decade - 1e-9)) + 1);
  return log_grid(lo, hi, points);
}

Quantity quantity_of(Theorem th) {
  switch (th) {
    case Theorem::ps1: return Quantity::small_jumps_drift;
    case Theorem::ps2:
    case Theorem::lemma_sj:
    case Theorem::lemma_sj_gauss:
    case Theorem::markov: return Quantity::small_jumps;
    default: return Quantity::increment;
  }
}

CurvePoint truth_point(const LevyModel& model, double eps, double t, const TruthSpec& truth, Quantity q,
                       std::uint32_t stream_id) {
  CurvePoint p;
  p.t = t;
  if (truth.kind == TruthKind::closed_form) {
    if (q != Quantity::increment || !model.closed_forms.tail) {
      raise(ErrorCode::TruthUnavailable, "no closed-form truth for model " + model.name);
    }
    p.truth = model.closed_forms.tail(eps, t);
    return p;
  }
  const SeededStream stream{truth.seed, stream_id};
  EstimateOptions eo;
  eo.confidence = truth.confidence;
  eo.method = truth.method;
  eo.shards = truth.shards;
  SmallJumpScheme scheme;
  scheme.gaussian_refinement = truth.gaussian_refinement;
  scheme.bias_budget = truth.bias_budget;
  MCEstimate e;
  double sigma2_delta = 0.0;
  if (q == Quantity::increment) {
    IncrementSampler probe(model, t, SmallJumpScheme{1.0, false, truth.bias_budget});
    if (!probe.exact()) {
      scheme.delta = inner_cutoff(model, t, truth);
      if (!scheme.gaussian_refinement) certify(model, t, eps, truth, scheme, eo);
    }
    auto sampler = std::make_shared<IncrementSampler>(model, t, scheme);
    sigma2_delta = sampler->exact() ? 0.0 : sampler->sigma2_delta();
    p.delta = sampler->exact() ? 0.0 : scheme.delta;
    e = estimate_tail_prob([sampler](CounterRng& r) { return sampler->draw(r); }, eps, t, truth.n, stream, eo);
  } else {
    scheme.delta = std::min(inner_cutoff(model, t, truth), 0.5 * eps);
    if (!scheme.gaussian_refinement) certify(model, t, eps, truth, scheme, eo);
    auto sampler = std::make_shared<SmallJumpSampler>(model, eps, scheme);
    sigma2_delta = sampler->sigma2_delta();
    p.delta = scheme.delta;
    const double shift = q == Quantity::small_jumps_drift ? t * drift_b(model, eps).value : 0.0;
    e = estimate_tail_prob([sampler, t, shift](CounterRng& r) { return shift + sampler->draw(t, r); }, eps, t,
                           truth.n, stream, eo);
  }
  p.certified = !(scheme.gaussian_refinement && sigma2_delta > 0.0);
  p.truth = e.p_hat;
  p.truth_ci = Interval{e.ci_low, e.ci_high};
  p.margin = e.margin;
  p.bias = e.certified_bias;
  p.estimate = e;
  return p;
}

ResidualCurve residual_curve(const LevyModel& model, double eps, const std::vector<double>& t_grid,
                             const TruthSpec& truth, Quantity q, std::optional<Theorem> theorem,
                             const BoundOptions& opts) {
  if (!(eps > 0.0)) raise(ErrorCode::InvalidCutoff, "eps must be positive");
  require_grid(t_grid);
  ResidualCurve c;
  c.model_id = model.name;
  c.eps = eps;
  c.quantity = q;
  c.lambda_eps = q == Quantity::increment ? lambda(model, eps).value : 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    CurvePoint p = truth_point(model, eps, t_grid[i], truth, q, static_cast<std::uint32_t>(i));
    fill_residual(p, c.lambda_eps * p.t);
    try {
      BoundResult b = theorem ? bound_for(model, *theorem, eps, p.t, opts) : auto_select(model, eps, p.t, opts);
      if (b.valid) p.bound = std::move(b);
    } catch (const LevyError&) {
    }
    c.points.push_back(std::move(p));
  }
  return c;
}

RateFit fit_rate(const ResidualCurve& curve, double floor) {
  std::vector<double> x, y;
  RateFit f;
  for (const auto& p : curve.points) {
    if (!(p.residual > floor)) continue;
    if (p.truth_ci && !(p.residual > 1.5 * (p.truth_ci->hi - p.truth_ci->lo))) continue;
    x.push_back(std::log(p.t));
    y.push_back(std::log(p.residual));
    if (f.points_used == 0) f.t_lo = p.t;
    f.t_hi = p.t;
    ++f.points_used;
  }
  if (f.points_used < 3) {
    raise(ErrorCode::TooFewPoints, "rate fit needs at least 3 usable points, got " + std::to_string(f.points_used));
  }
  const LineFit lf = least_squares(x, y);
  f.slope = lf.slope;
  f.intercept = lf.intercept;
  f.r2 = std::clamp(lf.r2, 0.0, 1.0);
  return f;
}

BoundResult apply_check(const LevyModel& model, const BoundCheck& check, double eps, double t,
                        const BoundOptions& opts) {
  if (check.theorem == Theorem::lambda2 && check.lipschitz_M) {
    return bound_cdf_iv_lipschitz(model, eps, t, check.lipschitz_M, opts);
  }
  return bound_for(model, check.theorem, eps, t, opts);
}

ValidationReport validate_bounds(const LevyModel& model, const ValidateConfig& cfg) {
  ValidationReport rep;
  std::vector<std::optional<BoundCheck>> checks;
  for (const auto& c : cfg.checks) checks.emplace_back(c);
  if (checks.empty()) checks.emplace_back(std::nullopt);
  std::uint32_t stream_id = 0;
  for (double eps : cfg.eps_grid) {
    for (const auto& check : checks) {
      const std::string th_name = check ? std::string(to_string(check->theorem)) : "auto";
      auto bound_at = [&](double t) {
        return check ? apply_check(model, *check, eps, t, cfg.bound_opts) : auto_select(model, eps, t, cfg.bound_opts);
      };
      std::vector<double> grid = cfg.t_grid;
      if (grid.empty()) {
        double t_max = kInf;
        try {
          t_max = bound_at(1e-12).t_max;
        } catch (const LevyError& e) {
          ValidationRow row;
          row.model_id = model.name;
          row.eps = eps;
          row.theorem = th_name;
          row.applicable = false;
          row.note = e.what();
          rep.rows.push_back(std::move(row));
          ++rep.skipped;
          continue;
        }
        if (!std::isfinite(t_max)) t_max = 0.1;
        grid = log_grid(t_max / 1000.0, t_max / 1.0001, cfg.points);
      }
      const Quantity q = check ? quantity_of(check->theorem) : Quantity::increment;
      const double lam = q == Quantity::increment ? lambda(model, eps).value : 0.0;
      for (double t : grid) {
        ValidationRow row;
        row.model_id = model.name;
        row.eps = eps;
        row.theorem = th_name;
        row.lambda_eps = lam;
        row.point.t = t;
        std::optional<BoundResult> b;
        try {
          b = bound_at(t);
        } catch (const LevyError& e) {
          row.note = e.what();
        }
        if (!b || !b->valid) {
          row.applicable = false;
          if (row.note.empty()) row.note = "outside theorem validity";
          rep.rows.push_back(std::move(row));
          ++rep.skipped;
          ++stream_id;
          continue;
        }
        row.theorem = std::string(to_string(b->theorem));
        CurvePoint p = truth_point(model, eps, t, cfg.truth, q, stream_id++);
        fill_residual(p, lam * t);
        p.bound = *b;
        row.point = std::move(p);
        row.margin = b->value - row.point.residual_lo;
        row.pass = row.point.residual_lo <= b->value;
        if (!row.point.certified) row.note = "uncertified gaussian refinement";
        row.pass ? ++rep.passes : ++rep.fails;
        rep.rows.push_back(std::move(row));
      }
    }
  }
  return rep;
}

// ===== discontinuous example =====

LevyModel discontinuous_example(double alpha, double eps, double stable_M, double bump_height) {
  if (!(alpha > 1.0 && alpha < 2.0)) raise(ErrorCode::AlphaOutOfRange, "discontinuous example requires alpha in (1,2)");
  if (!(eps > 0.0) || !(stable_M > 0.0) || !(bump_height > 0.0)) {
    raise(ErrorCode::InvalidArgument, "discontinuous example parameters must be positive");
  }
  LevyModel m;
  m.name = "discontinuous";
  m.kind = ModelKind::discontinuous;
  const double a = alpha, c = stable_M, h = bump_height, lo = eps, hi = eps + 1.0;
  m.density = [=](double x) {
    const double ax = std::abs(x);
    if (ax == 0.0) return 0.0;
    double v = ax <= 2.0 ? c * std::pow(ax, -1.0 - a) : 0.0;
    if (ax >= lo && ax <= hi) v += h;
    return v;
  };
  m.symmetric = true;
  m.variation = Variation::infinite;
  m.class_alpha = a;
  // Bump inside |x| <= 2 raises the class constant by h x^{1+alpha} at its far end.
  m.class_M = lo <= 2.0 ? c + h * std::pow(std::min(hi, 2.0), 1.0 + a) : c;
  m.global_M = c + h;
  m.support_pos = m.support_neg = std::max(2.0, hi);
  m.breakpoints = {lo, hi, 2.0};
  std::sort(m.breakpoints.begin(), m.breakpoints.end());
  m.params = {{"alpha", a}, {"eps", eps}, {"stable_M", c}, {"bump", h}};
  auto overlap = [=](double x) { return std::max(0.0, hi - std::max(x, lo)); };
  m.closed_forms.lambda = [=](double x) {
    const double s = x < 2.0 ? 2.0 * c * (std::pow(x, -a) - std::pow(2.0, -a)) / a : 0.0;
    return s + 2.0 * h * overlap(x);
  };
  m.closed_forms.sigma2 = [=](double x) {
    const double s = 2.0 * c * std::pow(std::min(x, 2.0), 2.0 - a) / (2.0 - a);
    const double u = std::clamp(x, lo, hi);
    return s + 2.0 * h * (u * u * u - lo * lo * lo) / 3.0;
  };
  m.closed_forms.drift = [](double) { return 0.0; };
  return m;
}

// ===== output =====

namespace {
std::string format17(double v) { return format_number(v); }
}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string curve_csv(const ResidualCurve& curve) {
  std::ostringstream os;
  os << "model,eps,t,truth,ci_low,ci_high,lambda_eps,residual,bound,theorem,valid,margin\n";
  for (const auto& p : curve.points) {
    const double lo = p.truth_ci ? p.truth_ci->lo : p.truth, hi = p.truth_ci ? p.truth_ci->hi : p.truth;
    os << curve.model_id << ',' << format_number(curve.eps) << ',' << format_number(p.t) << ','
       << format_number(p.truth) << ',' << format_number(lo) << ',' << format_number(hi) << ','
       << format_number(curve.lambda_eps) << ',' << format_number(p.residual) << ',';
    if (p.bound) {
      os << format_number(p.bound->value) << ',' << to_string(p.bound->theorem) << ','
         << (p.bound->valid ? "true" : "false") << ',' << format_number(p.bound->value - p.residual_lo);
    } else {
      os << ",,false,";
    }
    os << '\n';
  }
  return os.str();
}

std::string validation_csv(const ValidationReport& report) {
  std::ostringstream os;
  os << "model,eps,t,truth,ci_low,ci_high,lambda_eps,residual,bound,theorem,valid,margin,status\n";
  for (const auto& r : report.rows) {
    const auto& p = r.point;
    os << r.model_id << ',' << format_number(r.eps) << ',' << format_number(p.t) << ',';
    if (!r.applicable) {
      os << ",,," << format_number(r.lambda_eps) << ",,," << r.theorem << ",false,,SKIP\n";
      continue;
    }
    const double lo = p.truth_ci ? p.truth_ci->lo : p.truth, hi = p.truth_ci ? p.truth_ci->hi : p.truth;
    os << format_number(p.truth) << ',' << format_number(lo) << ',' << format_number(hi) << ','
       << format_number(r.lambda_eps) << ',' << format_number(p.residual) << ','
       << format_number(p.bound ? p.bound->value : 0.0) << ',' << r.theorem << ",true,"
       << format_number(r.margin) << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  return os.str();
}

std::string rate_json(const ResidualCurve& curve, const RateFit& fit) {
  ordered_json j;
  j["model"] = curve.model_id;
  j["eps"] = curve.eps;
  j["quantity"] = std::string(quantity_name(curve.quantity));
  j["lambda_eps"] = curve.lambda_eps;
  j["points"] = curve.points.size();
  ordered_json f;
  f["slope"] = fit.slope;
  f["intercept"] = fit.intercept;
  f["r2"] = fit.r2;
  f["t_lo"] = fit.t_lo;
  f["t_hi"] = fit.t_hi;
  f["points_used"] = fit.points_used;
  j["rate_fit"] = f;
  return dump(j);
}

std::string validation_json(const ValidationReport& report) {
  ordered_json j;
  j["passes"] = report.passes;
  j["fails"] = report.fails;
  j["skipped"] = report.skipped;
  j["ok"] = report.ok();
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json o;
    o["model"] = r.model_id;
    o["eps"] = r.eps;
    o["t"] = r.point.t;
    o["theorem"] = r.theorem;
    o["applicable"] = r.applicable;
    if (r.applicable) {
      o["truth"] = r.point.truth;
      o["residual"] = r.point.residual;
      o["residual_lo"] = r.point.residual_lo;
      o["bound"] = r.point.bound ? r.point.bound->value : 0.0;
      o["margin"] = r.margin;
      o["status"] = r.pass ? "PASS" : "FAIL";
    }
    if (!r.note.empty()) o["note"] = r.note;
    rows.push_back(std::move(o));
  }
  j["rows"] = rows;
  return dump(j);
}

std::string bound_json(const BoundResult& r) { return dump(bound_to_json(r)); }

std::string estimate_json(const MCEstimate& e) {
  ordered_json j;
  j["p_hat"] = e.p_hat;
  j["n"] = e.n;
  j["count"] = e.count;
  j["ci_low"] = e.ci_low;
  j["ci_high"] = e.ci_high;
  j["confidence"] = e.confidence;
  j["method"] = std::string(to_string(e.method));
  j["seed"] = e.seed;
  j["margin"] = e.margin;
  j["certified_bias"] = e.certified_bias;
  j["count_outer"] = e.count_outer;
  j["count_inner"] = e.count_inner;
  return dump(j);
}

}  // namespace levytail
