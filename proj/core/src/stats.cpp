#include "levytail/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "levytail/errors.hpp"

namespace levytail {
namespace {

void check(std::uint64_t k, std::uint64_t n, double confidence) {
  if (n == 0 || k > n) raise(ErrorCode::InvalidArgument, "interval requires 0 <= k <= n and n >= 1");
  if (!(confidence > 0.0 && confidence < 1.0)) raise(ErrorCode::InvalidArgument, "confidence must lie in (0,1)");
}

}  // namespace

Interval wilson_interval(std::uint64_t k, std::uint64_t n, double confidence) {
  check(k, n, confidence);
  const double z = boost::math::quantile(boost::math::normal(), 0.5 + 0.5 * confidence);
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  Interval out{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (k == 0) out.lo = 0.0;
  if (k == n) out.hi = 1.0;
  out.lo = std::min(out.lo, p);
  out.hi = std::max(out.hi, p);
  return out;
}

Interval clopper_pearson_interval(std::uint64_t k, std::uint64_t n, double confidence) {
  check(k, n, confidence);
  const double a = 1.0 - confidence;
  const double kd = static_cast<double>(k), nd = static_cast<double>(n);
  Interval out;
  out.lo = k == 0 ? 0.0 : boost::math::ibeta_inv(kd, nd - kd + 1.0, a / 2.0);
  out.hi = k == n ? 1.0 : boost::math::ibeta_inv(kd + 1.0, nd - kd, 1.0 - a / 2.0);
  return out;
}

double kolmogorov_q(double lambda) {
  if (lambda < 1e-3) return 1.0;
  double s = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    s += sign * term;
    sign = -sign;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * s, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) raise(ErrorCode::InvalidArgument, "KS test needs nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double en = std::sqrt(na * nb / (na + nb));
  return {d, kolmogorov_q((en + 0.12 + 0.11 / en) * d)};
}

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) raise(ErrorCode::TooFewPoints, "least squares needs at least 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  const double sse = syy - f.slope * sxy;
  f.r2 = syy > 0.0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  return f;
}

}  // namespace levytail
