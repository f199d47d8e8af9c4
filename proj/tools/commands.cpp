#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "levytail/bounds.hpp"
#include "levytail/constants.hpp"
#include "levytail/errors.hpp"
#include "levytail/harness.hpp"
#include "levytail/model_spec.hpp"
#include "levytail/simulate.hpp"

namespace levytail::cli {

namespace {

const char* const kCertificateKeys[] = {"class_M", "class_alpha", "global_M", "symmetric", "variation", "lipschitz",
                                        "M1"};

std::optional<std::string> get(const RunConfig& cfg, const std::string& key) {
  auto it = cfg.find(key);
  if (it == cfg.end()) return std::nullopt;
  return it->second;
}

double parse_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) raise(ErrorCode::ConfigError, "--" + key + " must be a number, got '" + text + "'");
  return v;
}

double number(const RunConfig& cfg, const std::string& key, std::optional<double> fallback = std::nullopt) {
  if (auto s = get(cfg, key)) return parse_number(key, *s);
  if (fallback) return *fallback;
  raise(ErrorCode::ConfigError, "missing required parameter --" + key);
}

std::uint64_t count(const RunConfig& cfg, const std::string& key, double fallback) {
  const double v = number(cfg, key, fallback);
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e15) {
    raise(ErrorCode::ConfigError, "--" + key + " must be a positive integer");
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// "lo:hi:points" (log-spaced) or a comma-separated list.
std::vector<double> grid(const std::string& key, const std::string& text) {
  std::vector<double> g;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) raise(ErrorCode::ConfigError, "--" + key + " must be lo:hi:points");
    const double lo = parse_number(key, parts[0]), hi = parse_number(key, parts[1]);
    const double pts = parse_number(key, parts[2]);
    if (!(lo > 0.0) || !(hi >= lo) || !(pts >= 1.0) || pts != std::floor(pts)) {
      raise(ErrorCode::ConfigError, "--" + key + " needs 0 < lo <= hi and an integer point count");
    }
    return log_grid(lo, hi, static_cast<int>(pts));
  }
  for (const auto& p : split(text, ',')) g.push_back(parse_number(key, p));
  if (g.empty()) raise(ErrorCode::ConfigError, "--" + key + " is empty");
  return g;
}

LevyModel model(const RunConfig& cfg) {
  auto spec = get(cfg, "model");
  if (!spec) raise(ErrorCode::ConfigError, "missing required parameter --model");
  LevyModel m = load_model(*spec);
  for (const char* key : kCertificateKeys) {
    if (auto v = get(cfg, key)) apply_certificate(m, key, *v);
  }
  return m;
}

std::string format(const RunConfig& cfg, const std::string& fallback) {
  const std::string f = get(cfg, "format").value_or(fallback);
  if (f != "csv" && f != "json") raise(ErrorCode::ConfigError, "--format must be csv or json");
  return f;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (auto path = get(cfg, "out")) {
    std::ofstream os(*path, std::ios::binary);
    if (!os) raise(ErrorCode::ConfigError, "cannot open output file " + *path);
    os << text;
    return;
  }
  std::cout << text;
}

BoundOptions bound_options(const RunConfig& cfg) {
  BoundOptions o;
  auto c = get(cfg, "corrupt");
  if (!c) return o;
  // NAME=FACTOR, FACTOR alone (every constant), or empty (every constant divided by 100).
  std::string name = "*", factor = "0.01";
  if (!c->empty()) {
    const auto eq = c->find('=');
    if (eq == std::string::npos) {
      factor = *c;
    } else {
      name = c->substr(0, eq);
      factor = c->substr(eq + 1);
    }
  }
  o.constant_scale[name] = parse_number("corrupt", factor);
  return o;
}

TruthSpec truth_spec(const RunConfig& cfg, const LevyModel& m, bool closed_possible) {
  TruthSpec t;
  const std::string kind = get(cfg, "truth").value_or(closed_possible && m.closed_forms.tail ? "closed" : "mc");
  if (kind == "closed") t.kind = TruthKind::closed_form;
  else if (kind == "mc") t.kind = TruthKind::mc;
  else raise(ErrorCode::ConfigError, "--truth must be closed or mc");
  t.n = count(cfg, "n", 1e6);
  t.seed = count(cfg, "seed", 1.0);
  t.shards = static_cast<int>(count(cfg, "shards", 1.0));
  t.confidence = number(cfg, "confidence", 0.99);
  if (!(t.confidence > 0.0 && t.confidence < 1.0)) raise(ErrorCode::ConfigError, "--confidence must lie in (0,1)");
  const std::string ci = get(cfg, "ci").value_or("clopper_pearson");
  if (ci == "wilson") t.method = CiMethod::wilson;
  else if (ci != "clopper_pearson") raise(ErrorCode::ConfigError, "--ci must be wilson or clopper_pearson");
  t.jump_budget = number(cfg, "jump-budget", 100.0);
  t.bias_budget = number(cfg, "bias-budget", 1e-7);
  if (auto d = get(cfg, "delta-scale")) t.delta_scale = parse_number("delta-scale", *d);
  t.gaussian_refinement = get(cfg, "gaussian").value_or("false") == "true";
  return t;
}

Quantity quantity(const RunConfig& cfg) {
  const std::string q = get(cfg, "quantity").value_or("increment");
  if (q == "increment") return Quantity::increment;
  if (q == "small_jumps") return Quantity::small_jumps;
  if (q == "small_jumps_drift") return Quantity::small_jumps_drift;
  raise(ErrorCode::ConfigError, "--quantity must be increment, small_jumps or small_jumps_drift");
}

std::optional<Theorem> theorem(const std::string& name) {
  if (name == "auto") return std::nullopt;
  auto th = theorem_from_string(name);
  if (!th) raise(ErrorCode::ConfigError, "--theorem must be auto|ps1|teo1|ps2|lambda2bis|lambda2|corollary, got '" + name + "'");
  return th;
}

}  // namespace

int cmd_functionals(const RunConfig& cfg) {
  const LevyModel m = model(cfg);
  const auto g = grid("eps-grid", get(cfg, "eps-grid").value_or(get(cfg, "eps").value_or("0.001:2:12")));
  for (double a : g) {
    if (!(a > 0.0)) raise(ErrorCode::InvalidCutoff, "cutoff a must be positive, got " + format_number(a));
  }
  std::ostringstream os;
  os << "a,lambda,sigma2,b,lambda_err,sigma2_err,b_err\n";
  for (double a : g) {
    const auto l = lambda(m, a), s = sigma2(m, a), b = drift_b(m, a);
    os << format_number(a) << ',' << format_number(l.value) << ',' << format_number(s.value) << ','
       << format_number(b.value) << ',' << format_number(l.abs_error_estimate) << ','
       << format_number(s.abs_error_estimate) << ',' << format_number(b.abs_error_estimate) << '\n';
  }
  emit(cfg, os.str());
  return kOk;
}

int cmd_bound(const RunConfig& cfg) {
  const LevyModel m = model(cfg);
  const double eps = number(cfg, "eps"), t = number(cfg, "t");
  const auto th = theorem(get(cfg, "theorem").value_or("auto"));
  const BoundOptions opts = bound_options(cfg);
  const BoundResult r = th ? bound_for(m, *th, eps, t, opts) : auto_select(m, eps, t, opts);
  emit(cfg, bound_json(r));
  if (!r.valid) {
    std::cerr << "NoApplicableBound: t = " << format_number(t) << " exceeds t_max = " << format_number(r.t_max) << '\n';
    return kNoBound;
  }
  return kOk;
}

int cmd_validate(const RunConfig& cfg) {
  const LevyModel m = model(cfg);
  ValidateConfig vc;
  vc.eps_grid = grid("eps-grid", get(cfg, "eps-grid").value_or(get(cfg, "eps").value_or("1")));
  if (auto g = get(cfg, "t-grid")) vc.t_grid = grid("t-grid", *g);
  if (auto p = get(cfg, "points")) vc.points = static_cast<int>(count(cfg, "points", 12));
  vc.truth = truth_spec(cfg, m, true);
  vc.bound_opts = bound_options(cfg);
  std::optional<double> lip;
  if (auto l = get(cfg, "lipschitz-M")) lip = parse_number("lipschitz-M", *l);
  for (const auto& name : split(get(cfg, "theorem").value_or("auto"), ',')) {
    if (auto th = theorem(name)) vc.checks.push_back(BoundCheck{*th, *th == Theorem::lambda2 ? lip : std::nullopt});
  }
  const ValidationReport rep = validate_bounds(m, vc);
  emit(cfg, format(cfg, "csv") == "csv" ? validation_csv(rep) : validation_json(rep));
  std::cerr << "validate: " << rep.passes << " PASS, " << rep.fails << " FAIL, " << rep.skipped << " skipped\n";
  return rep.ok() ? kOk : kFail;
}

int cmd_rate(const RunConfig& cfg) {
  const LevyModel m = model(cfg);
  const double eps = number(cfg, "eps", 1.0);
  const Quantity q = quantity(cfg);
  std::vector<double> tg = get(cfg, "t-grid") ? grid("t-grid", *get(cfg, "t-grid")) : default_t_grid(1e-4, 1e-2);
  const TruthSpec truth = truth_spec(cfg, m, q == Quantity::increment);
  const auto th = theorem(get(cfg, "theorem").value_or("auto"));
  const ResidualCurve curve = residual_curve(m, eps, tg, truth, q, th, bound_options(cfg));
  const bool json = format(cfg, "json") == "json";
  if (!json) emit(cfg, curve_csv(curve));
  const RateFit fit = fit_rate(curve);
  if (json) emit(cfg, rate_json(curve, fit));
  std::cerr << "rate: slope " << format_number(fit.slope) << " over " << fit.points_used << " points\n";
  if (auto w = get(cfg, "slope-window")) {
    const auto parts = split(*w, ':');
    if (parts.size() != 2) raise(ErrorCode::ConfigError, "--slope-window must be lo:hi");
    const double lo = parse_number("slope-window", parts[0]), hi = parse_number("slope-window", parts[1]);
    if (fit.slope < lo || fit.slope > hi) {
      std::cerr << "FAIL: slope outside [" << format_number(lo) << ", " << format_number(hi) << "]\n";
      return kFail;
    }
  }
  return kOk;
}

int cmd_simulate(const RunConfig& cfg) {
  const LevyModel m = model(cfg);
  const double eps = number(cfg, "eps"), t = number(cfg, "t");
  const Quantity q = quantity(cfg);
  TruthSpec truth = truth_spec(cfg, m, false);
  truth.kind = TruthKind::mc;
  truth.confidence = number(cfg, "confidence", 0.95);
  const CurvePoint p = truth_point(m, eps, t, truth, q, 0);
  emit(cfg, estimate_json(*p.estimate));
  return kOk;
}

int cmd_constants(const RunConfig& cfg) {
  const double alpha = number(cfg, "alpha");
  std::optional<double> M, eps;
  if (get(cfg, "M")) M = number(cfg, "M");
  if (get(cfg, "eps")) eps = number(cfg, "eps");
  const ConstantsTable tab = constants(alpha, M, eps);
  std::ostringstream os;
  os << "{\n  \"alpha\": " << format_number(alpha);
  if (M) os << ",\n  \"M\": " << format_number(*M);
  if (eps) os << ",\n  \"eps\": " << format_number(*eps);
  os << ",\n  \"entries\": {";
  const char* sep = "\n";
  for (const auto& [name, v] : tab.entries) {
    os << sep << "    \"" << name << "\": " << format_number(v);
    sep = ",\n";
  }
  os << "\n  }\n}\n";
  emit(cfg, os.str());
  return kOk;
}

int run_guarded(int (*cmd)(const RunConfig&), const RunConfig& cfg) {
  try {
    return cmd(cfg);
  } catch (const LevyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::NoApplicableBound) return kNoBound;
    return is_numeric_failure(e.code()) ? kNumeric : kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  }
}

}  // namespace levytail::cli
