#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "levytail/levy_model.hpp"
#include "levytail/rng.hpp"

namespace levytail {

using Sampler = std::function<double(CounterRng&)>;

struct SmallJumpScheme {
  double delta = 0.0;  // inner cutoff
  bool gaussian_refinement = false;
  double bias_budget = 1e-7;
};

enum class CiMethod { wilson, clopper_pearson };
std::string_view to_string(CiMethod m);

enum class Exceedance { two_sided, upper };  // |x| > eps or x > eps

struct MCEstimate {
  double p_hat = 0.0;
  std::uint64_t n = 0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  double confidence = 0.95;
  CiMethod method = CiMethod::wilson;
  std::uint64_t seed = 0;
  int shards = 1;
  std::uint64_t count = 0;
  // Bias certification: counts at eps + margin and eps - margin.
  double margin = 0.0;
  double certified_bias = 0.0;
  std::uint64_t count_outer = 0;
  std::uint64_t count_inner = 0;
};

// Jumps with |x| in (lo, hi] drawn by tabulated cells plus an envelope tail.
class BandSampler {
 public:
  BandSampler(const LevyModel& model, double lo, double hi, int cells = 4096);

  double intensity() const { return total_; }
  double draw(CounterRng& rng) const;

 private:
  struct Cell {
    double a, b, fmax, fmin;
    int sign;
  };
  std::function<double(double)> density_;
  std::vector<Cell> cells_;
  // Walker alias table over cells_ followed by the positive and negative tails.
  std::vector<double> alias_prob_;
  std::vector<std::uint32_t> alias_;
  double total_ = 0.0;
  // Envelope tails beyond x_cut on each side.
  std::optional<TailEnvelope> env_;
  double x_cut_ = 0.0;
  double tail_mass_pos_ = 0.0, tail_mass_neg_ = 0.0;

  double draw_tail(int sign, CounterRng& rng) const;
  void build_alias(const std::vector<double>& masses);
};

double sample_compound_poisson(double intensity, const std::function<double(CounterRng&)>& jump, double t,
                               CounterRng& rng);

// Certified bound on P(|M_t(delta)| > m): min of Markov and the two-sided Lemma-sj form.
double small_jump_exceedance_bound(double sigma2_delta, double delta, double t, double m);

class SmallJumpSampler {
 public:
  // Approximates M_t(eps) by Z_t(delta, eps) - t(b(eps) - b(delta)) (+ Gaussian).
  SmallJumpSampler(const LevyModel& model, double eps, const SmallJumpScheme& scheme);

  double draw(double t, CounterRng& rng) const;
  double sigma2_delta() const { return sigma2_delta_; }
  const SmallJumpScheme& scheme() const { return scheme_; }

 private:
  SmallJumpScheme scheme_;
  std::shared_ptr<BandSampler> band_;
  double compensator_ = 0.0;  // b(eps) - b(delta)
  double sigma2_delta_ = 0.0;
};

// Increment sampler for X_t; exact for cauchy, gamma, inverse_gaussian and stable builtins.
class IncrementSampler {
 public:
  IncrementSampler(const LevyModel& model, double t, const SmallJumpScheme& scheme);

  double draw(CounterRng& rng) const;
  bool exact() const { return exact_; }
  double sigma2_delta() const { return sigma2_delta_; }
  double t() const { return t_; }
  const SmallJumpScheme& scheme() const { return scheme_; }

 private:
  ModelKind kind_;
  double t_;
  SmallJumpScheme scheme_;
  bool exact_ = false;
  double p1_ = 0.0, p2_ = 0.0;
  std::shared_ptr<BandSampler> band_;
  double drift_ = 0.0;
  double sigma2_delta_ = 0.0;
};

double sample_small_jumps(const LevyModel& model, double eps, const SmallJumpScheme& scheme, double t,
                          CounterRng& rng);
double sample_increment(const LevyModel& model, double t, CounterRng& rng, const SmallJumpScheme& scheme);

struct EstimateOptions {
  double confidence = 0.95;
  CiMethod method = CiMethod::wilson;
  int shards = 1;
  Exceedance exceedance = Exceedance::two_sided;
  // Bias certificate: the discarded remainder satisfies P(|R| > margin) <= certified_bias.
  double margin = 0.0;
  double certified_bias = 0.0;
};

MCEstimate estimate_tail_prob(const Sampler& sampler, double eps, double t, std::uint64_t n,
                              const SeededStream& stream, const EstimateOptions& opts = {});

// Smallest margin with certified bias within scheme.bias_budget (SchemeInfeasible otherwise).
double certify_margin(double sigma2_delta, double delta, double t, double eps, double bias_budget);

// Jump-budget inner cutoff: about `jumps` expected jumps beyond delta within time t.
double delta_for_jump_budget(const LevyModel& model, double t, double jumps);

}  // namespace levytail
