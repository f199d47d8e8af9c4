#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levytail/bounds.hpp"
#include "levytail/levy_model.hpp"
#include "levytail/simulate.hpp"
#include "levytail/stats.hpp"

namespace levytail {

enum class TruthKind { closed_form, mc };

struct TruthSpec {
  TruthKind kind = TruthKind::closed_form;
  std::uint64_t n = 1000000;
  double confidence = 0.99;
  CiMethod method = CiMethod::clopper_pearson;
  std::uint64_t seed = 1;
  int shards = 1;
  double jump_budget = 100.0;  // expected jumps per sample for composed samplers
  double bias_budget = 1e-7;
  // Delta keeps shrinking until margin <= max_margin * eps or the jump count would pass max_jumps.
  double max_margin = 0.1;
  double max_jumps = 200.0;
  bool gaussian_refinement = false;
  // Inner cutoff as a multiple of the stable scale (t class_M)^{1/alpha}; overrides jump_budget.
  std::optional<double> delta_scale;
};

// What the truth measures: the X_t tail (residual against lambda_eps t), P(|M_t| >= eps),
// or P(|t b(eps) + M_t| >= eps).
enum class Quantity { increment, small_jumps, small_jumps_drift };

struct CurvePoint {
  double t = 0.0;
  double truth = 0.0;
  std::optional<Interval> truth_ci;
  double residual = 0.0;
  double residual_lo = 0.0;  // lower confidence limit, bias included
  double residual_hi = 0.0;
  std::optional<BoundResult> bound;
  bool certified = true;  // false when an uncertified Gaussian refinement was used
  double delta = 0.0;
  double margin = 0.0;
  double bias = 0.0;
  std::optional<MCEstimate> estimate;
};

struct ResidualCurve {
  std::string model_id;
  double eps = 0.0;
  double lambda_eps = 0.0;
  Quantity quantity = Quantity::increment;
  std::vector<CurvePoint> points;
};

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  int points_used = 0;
};

std::vector<double> log_grid(double lo, double hi, int points);
// 12 points per decade on [lo, hi].
std::vector<double> default_t_grid(double lo, double hi, int per_decade = 12);

// Truth of one grid point; stream_id separates points.
CurvePoint truth_point(const LevyModel& model, double eps, double t, const TruthSpec& truth, Quantity q,
                       std::uint32_t stream_id);

// With no theorem given, attaches auto_select when a bound applies.
ResidualCurve residual_curve(const LevyModel& model, double eps, const std::vector<double>& t_grid,
                             const TruthSpec& truth, Quantity q = Quantity::increment,
                             std::optional<Theorem> theorem = std::nullopt, const BoundOptions& opts = {});

RateFit fit_rate(const ResidualCurve& curve, double floor = 1e-14);

struct BoundCheck {
  Theorem theorem = Theorem::lambda2bis;
  std::optional<double> lipschitz_M;  // lambda2 only
};

struct ValidateConfig {
  std::vector<double> eps_grid;
  std::vector<double> t_grid;  // empty: points log-spaced on [t_max/1000, t_max/1.0001] per (eps, theorem)
  int points = 12;
  TruthSpec truth;
  std::vector<BoundCheck> checks;  // empty: auto_select
  BoundOptions bound_opts;
};

struct ValidationRow {
  std::string model_id;
  double eps = 0.0;
  std::string theorem;
  CurvePoint point;
  double lambda_eps = 0.0;
  bool applicable = true;
  std::string note;
  bool pass = true;
  double margin = 0.0;  // bound - residual_lo
};

struct ValidationReport {
  std::vector<ValidationRow> rows;
  int passes = 0;
  int fails = 0;
  int skipped = 0;
  bool ok() const { return fails == 0; }
};

BoundResult apply_check(const LevyModel& model, const BoundCheck& check, double eps, double t,
                        const BoundOptions& opts);
Quantity quantity_of(Theorem th);

ValidationReport validate_bounds(const LevyModel& model, const ValidateConfig& cfg);

// Symmetric stable_M|x|^{-1-alpha} on 0<|x|<=2 plus bump_height on eps<=|x|<=eps+1.
LevyModel discontinuous_example(double alpha, double eps, double stable_M, double bump_height);

// ===== output =====

std::string format_number(double v);
std::string curve_csv(const ResidualCurve& curve);
std::string validation_csv(const ValidationReport& report);
std::string rate_json(const ResidualCurve& curve, const RateFit& fit);
std::string validation_json(const ValidationReport& report);
std::string bound_json(const BoundResult& r);
std::string estimate_json(const MCEstimate& e);

}  // namespace levytail
