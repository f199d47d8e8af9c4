#include "levytail/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "levytail/bounds.hpp"
#include "levytail/errors.hpp"
#include "levytail/samplers.hpp"
#include "levytail/stats.hpp"

namespace levytail {
namespace {

// Copy of the model restricted to one half-line, without closed forms.
LevyModel one_side(const LevyModel& m, int sign) {
  LevyModel c = m;
  c.closed_forms = {};
  c.symmetric = false;
  auto f = m.density;
  c.density = [f, sign](double x) { return x * sign > 0.0 ? f(x) : 0.0; };
  if (sign > 0) c.support_neg = 0.0;
  else c.support_pos = 0.0;
  return c;
}

double edge_value(const std::function<double(double)>& f, double sign, double from, double to) {
  return f(sign * std::nextafter(from, to));
}

}  // namespace

std::string_view to_string(CiMethod m) { return m == CiMethod::wilson ? "wilson" : "clopper_pearson"; }

// ===== BandSampler =====

BandSampler::BandSampler(const LevyModel& model, double lo, double hi, int cells) : density_(model.density) {
  if (!(lo > 0.0) || !(hi > lo)) raise(ErrorCode::InvalidCutoff, "band sampler requires 0 < lo < hi");
  if (cells < 2) raise(ErrorCode::InvalidArgument, "band sampler needs at least 2 cells");
  const int per_side = cells / 2;
  std::vector<double> masses;
  double break_max = 0.0;
  for (double b : model.breakpoints) break_max = std::max(break_max, b);
  QuadOptions qo;
  qo.rel_tol = 1e-11;
  qo.abs_tol = 1e-15;
  for (int sign : {+1, -1}) {
    const double extent = sign > 0 ? model.support_pos : model.support_neg;
    double upper = std::min(hi, extent);
    if (!(upper > lo)) continue;
    double tail_mass = 0.0;
    if (std::isinf(upper)) {
      if (!model.envelope) raise(ErrorCode::NonIntegrableTail, "unbounded jumps need a tail envelope");
      env_ = model.envelope;
      x_cut_ = std::max({4.0 * lo, model.envelope->x_env, 2.0, break_max * 1.5});
      upper = x_cut_;
      tail_mass = lambda(one_side(model, sign), x_cut_, Method::quadrature).value;
    }
    std::vector<double> edges;
    const double ratio = std::log(upper / lo);
    for (int i = 0; i <= per_side; ++i) edges.push_back(lo * std::exp(ratio * i / per_side));
    edges.back() = upper;
    for (double b : model.breakpoints) {
      if (b > lo && b < upper) edges.push_back(b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    const double s = sign;
    const auto& f = density_;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      const double a = edges[i], b = edges[i + 1];
      const QuadResult q = integrate([&f, s](double x) { return f(s * x); }, a, b, qo);
      if (!(q.value > 0.0)) continue;
      const double fa = edge_value(f, s, a, b), fb = edge_value(f, s, b, a), fc = f(s * 0.5 * (a + b));
      cells_.push_back({a, b, std::max({fa, fb, fc}) * (1.0 + 1e-9), std::min({fa, fb, fc}) * (1.0 - 1e-9), sign});
      masses.push_back(q.value);
    }
    if (sign > 0) tail_mass_pos_ = tail_mass;
    else tail_mass_neg_ = tail_mass;
  }
  masses.push_back(tail_mass_pos_);
  masses.push_back(tail_mass_neg_);
  for (double m : masses) total_ += m;
  build_alias(masses);
}

void BandSampler::build_alias(const std::vector<double>& masses) {
  const std::size_t n = masses.size();
  alias_prob_.assign(n, 1.0);
  alias_.resize(n);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    alias_[i] = static_cast<std::uint32_t>(i);
    scaled[i] = total_ > 0.0 ? masses[i] * static_cast<double>(n) / total_ : 0.0;
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back(), l = large.back();
    small.pop_back();
    alias_prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
}

double BandSampler::draw_tail(int sign, CounterRng& rng) const {
  const TailEnvelope& env = *env_;
  for (;;) {
    double x, g;
    if (env.kind == TailEnvelope::Kind::power) {
      x = x_cut_ * std::pow(rng.uniform(), -1.0 / (env.rate - 1.0));
      g = env.scale * std::pow(x, -env.rate);
    } else {
      x = x_cut_ + draw_exponential(rng) / env.rate;
      g = env.scale * std::exp(-env.rate * x);
    }
    if (rng.uniform() * g <= density_(sign * x)) return sign * x;
  }
}

double BandSampler::draw(CounterRng& rng) const {
  const double u = rng.uniform() * static_cast<double>(alias_.size());
  std::size_t k = std::min(static_cast<std::size_t>(u), alias_.size() - 1);
  if (u - static_cast<double>(k) >= alias_prob_[k]) k = alias_[k];
  if (k == cells_.size()) return draw_tail(+1, rng);
  if (k == cells_.size() + 1) return draw_tail(-1, rng);
  const Cell& c = cells_[k];
  for (;;) {
    const double x = c.a + (c.b - c.a) * rng.uniform();
    const double v = rng.uniform() * c.fmax;
    if (v <= c.fmin || v <= density_(c.sign * x)) return c.sign * x;
  }
}

// ===== samplers =====

double sample_compound_poisson(double intensity, const std::function<double(CounterRng&)>& jump, double t,
                               CounterRng& rng) {
  if (!(intensity > 0.0)) return 0.0;
  const std::uint64_t n = draw_poisson(intensity * t, rng);
  double s = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) s += jump(rng);
  return s;
}

double small_jump_exceedance_bound(double sigma2_delta, double delta, double t, double m) {
  if (sigma2_delta <= 0.0) return 0.0;
  const double markov = t * sigma2_delta / (m * m);
  const double chernoff = 2.0 * chernoff_general_one_sided(sigma2_delta, delta, t, m);
  return std::min({1.0, markov, chernoff});
}

double certify_margin(double sigma2_delta, double delta, double t, double eps, double budget) {
  if (sigma2_delta <= 0.0) return 0.0;
  double hi = 0.9 * eps;
  if (small_jump_exceedance_bound(sigma2_delta, delta, t, hi) > budget) {
    raise(ErrorCode::SchemeInfeasible, "no margin below 0.9 eps meets the bias budget");
  }
  double lo = 1e-12 * eps;
  if (small_jump_exceedance_bound(sigma2_delta, delta, t, lo) <= budget) return lo;
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (small_jump_exceedance_bound(sigma2_delta, delta, t, mid) <= budget) hi = mid;
    else lo = mid;
    if (hi / lo < 1.0 + 1e-12) break;
  }
  return hi;
}

SmallJumpSampler::SmallJumpSampler(const LevyModel& model, double eps, const SmallJumpScheme& scheme)
    : scheme_(scheme) {
  if (!(scheme.delta > 0.0 && scheme.delta < eps)) raise(ErrorCode::InvalidCutoff, "scheme requires 0 < delta < eps");
  band_ = std::make_shared<BandSampler>(model, scheme.delta, eps);
  compensator_ = band_first_moment(model, scheme.delta, eps).value;
  sigma2_delta_ = sigma2(model, scheme.delta).value;
}

double SmallJumpSampler::draw(double t, CounterRng& rng) const {
  const BandSampler& b = *band_;
  double x = sample_compound_poisson(b.intensity(), [&b](CounterRng& r) { return b.draw(r); }, t, rng) -
             t * compensator_;
  if (scheme_.gaussian_refinement) x += std::sqrt(t * sigma2_delta_) * draw_normal(rng);
  return x;
}

IncrementSampler::IncrementSampler(const LevyModel& model, double t, const SmallJumpScheme& scheme)
    : kind_(model.kind), t_(t), scheme_(scheme) {
  if (!(t > 0.0)) raise(ErrorCode::InvalidArgument, "t must be positive");
  switch (model.kind) {
    case ModelKind::cauchy:
      exact_ = true;
      p1_ = t;
      return;
    case ModelKind::gamma:
      exact_ = true;
      p1_ = t;
      return;
    case ModelKind::inverse_gaussian:
      exact_ = true;
      p1_ = std::sqrt(std::numbers::pi) * t;
      p2_ = 2.0 * std::numbers::pi * t * t;
      return;
    case ModelKind::stable: {
      exact_ = true;
      p1_ = model.params.at("alpha");
      p2_ = stable_scale_from_density(p1_, model.params.at("scale")) * std::pow(t, 1.0 / p1_);
      return;
    }
    default:
      break;
  }
  if (!(scheme.delta > 0.0)) raise(ErrorCode::InvalidCutoff, "composed sampler requires delta > 0");
  band_ = std::make_shared<BandSampler>(model, scheme.delta, kInf);
  drift_ = t * drift_b(model, scheme.delta).value;
  sigma2_delta_ = sigma2(model, scheme.delta).value;
}

double IncrementSampler::draw(CounterRng& rng) const {
  switch (kind_) {
    case ModelKind::cauchy: return draw_cauchy(p1_, rng);
    case ModelKind::gamma: return draw_gamma(p1_, rng);
    case ModelKind::inverse_gaussian: return draw_inverse_gaussian(p1_, p2_, rng);
    case ModelKind::stable: return draw_symmetric_stable(p1_, p2_, rng);
    default: break;
  }
  const BandSampler& b = *band_;
  double x = drift_ + sample_compound_poisson(b.intensity(), [&b](CounterRng& r) { return b.draw(r); }, t_, rng);
  if (scheme_.gaussian_refinement) x += std::sqrt(t_ * sigma2_delta_) * draw_normal(rng);
  return x;
}

double sample_small_jumps(const LevyModel& model, double eps, const SmallJumpScheme& scheme, double t,
                          CounterRng& rng) {
  return SmallJumpSampler(model, eps, scheme).draw(t, rng);
}

double sample_increment(const LevyModel& model, double t, CounterRng& rng, const SmallJumpScheme& scheme) {
  return IncrementSampler(model, t, scheme).draw(rng);
}

// ===== estimation =====

MCEstimate estimate_tail_prob(const Sampler& sampler, double eps, double t, std::uint64_t n,
                              const SeededStream& stream, const EstimateOptions& opts) {
  if (n == 0) raise(ErrorCode::InvalidArgument, "n must be at least 1");
  if (!(opts.confidence > 0.0 && opts.confidence < 1.0)) raise(ErrorCode::InvalidArgument, "confidence must lie in (0,1)");
  if (!(eps > 0.0)) raise(ErrorCode::InvalidCutoff, "eps must be positive");
  if (!(t > 0.0)) raise(ErrorCode::InvalidArgument, "t must be positive");
  if (opts.shards < 1) raise(ErrorCode::InvalidArgument, "shards must be at least 1");
  const double m = opts.margin;
  if (m < 0.0 || m >= eps) raise(ErrorCode::InvalidArgument, "margin must lie in [0, eps)");
  const auto shards = static_cast<std::uint64_t>(opts.shards);
  struct Counts {
    std::uint64_t mid = 0, outer = 0, inner = 0;
  };
  std::vector<Counts> counts(shards);
  const bool two = opts.exceedance == Exceedance::two_sided;
  auto work = [&](std::uint64_t s) {
    const std::uint64_t begin = n * s / shards, end = n * (s + 1) / shards;
    Counts c;
    for (std::uint64_t i = begin; i < end; ++i) {
      CounterRng rng(stream, i);
      const double x = sampler(rng);
      const double v = two ? std::abs(x) : x;
      c.mid += v > eps;
      c.outer += v > eps + m;
      c.inner += v > eps - m;
    }
    counts[s] = c;
  };
  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t s = 0; s < shards; ++s) threads.emplace_back(work, s);
    for (auto& th : threads) th.join();
  }
  Counts total;
  for (const auto& c : counts) {
    total.mid += c.mid;
    total.outer += c.outer;
    total.inner += c.inner;
  }
  MCEstimate e;
  e.n = n;
  e.count = total.mid;
  e.count_outer = total.outer;
  e.count_inner = total.inner;
  e.p_hat = static_cast<double>(total.mid) / static_cast<double>(n);
  e.confidence = opts.confidence;
  e.method = opts.method;
  e.seed = stream.master_seed;
  e.shards = opts.shards;
  e.margin = m;
  e.certified_bias = opts.certified_bias;
  auto ci = [&](std::uint64_t k) {
    return opts.method == CiMethod::wilson ? wilson_interval(k, n, opts.confidence)
                                           : clopper_pearson_interval(k, n, opts.confidence);
  };
  e.ci_low = std::max(0.0, ci(total.outer).lo - opts.certified_bias);
  e.ci_high = std::min(1.0, ci(total.inner).hi + opts.certified_bias);
  return e;
}

double delta_for_jump_budget(const LevyModel& model, double t, double jumps) {
  if (!(t > 0.0) || !(jumps > 0.0)) raise(ErrorCode::InvalidArgument, "jump budget needs t > 0 and jumps > 0");
  double lo = 1e-12, hi = 1.0;
  auto count = [&](double d) { return t * lambda(model, d).value; };
  if (count(hi) >= jumps) return hi;
  if (count(lo) <= jumps) return lo;
  for (int i = 0; i < 200 && hi / lo > 1.0 + 1e-10; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (count(mid) > jumps) lo = mid;
    else hi = mid;
  }
  return hi;
}

}  // namespace levytail
