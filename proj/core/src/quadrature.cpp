#include "levytail/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace levytail {
namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  double fv1[7], fv2[7];
  for (int j = 0; j < 3; ++j) {
    const int jj = 2 * j + 1;
    const double dx = half * kXgk[jj];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[jj] = f1;
    fv2[jj] = f2;
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[jj] * (f1 + f2);
    resabs += kWgk[jj] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jj = 2 * j;
    const double dx = half * kXgk[jj];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[jj] = f1;
    fv2[jj] = f2;
    resk += kWgk[jj] * (f1 + f2);
    resabs += kWgk[jj] * (std::abs(f1) + std::abs(f2));
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }
  const double ah = std::abs(half);
  const double result = resk * half;
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  if (resabs > tiny / (50.0 * eps)) err = std::max(eps * 50.0 * resabs, err);
  return {a, b, result, err};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  heap.push(first);
  double total = first.value;
  double total_err = first.error;
  int evals = 15;
  int pieces = 1;
  while (true) {
    const double tol = std::max(opts.rel_tol * std::abs(total), opts.abs_tol);
    if (total_err <= tol) {
      out.converged = true;
      break;
    }
    if (pieces >= opts.max_subdivisions) break;
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) break;
    heap.pop();
    Segment left = gk15(f, worst.a, mid);
    Segment right = gk15(f, mid, worst.b);
    evals += 30;
    ++pieces;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to drop accumulated cancellation in the running totals.
  double sum = 0.0, esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().error;
    heap.pop();
  }
  out.value = sum;
  out.abs_error = esum;
  out.evaluations = evals;
  if (!out.converged) out.converged = esum <= std::max(opts.rel_tol * std::abs(sum), opts.abs_tol);
  return out;
}

QuadResult integrate_log(const Integrand& f, double lo, double hi, const QuadOptions& opts) {
  if (!(lo > 0.0) || !(hi >= lo)) {
    QuadResult bad;
    bad.value = std::numeric_limits<double>::quiet_NaN();
    return bad;
  }
  auto g = [&f](double u) {
    const double x = std::exp(u);
    return f(x) * x;
  };
  return integrate(g, std::log(lo), std::log(hi), opts);
}

QuadResult integrate_log_split(const Integrand& f, double lo, double hi,
                               const std::vector<double>& breaks, const QuadOptions& opts) {
  std::vector<double> pts{lo};
  std::vector<double> inner;
  for (double b : breaks) {
    if (b > lo && b < hi) inner.push_back(b);
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  pts.insert(pts.end(), inner.begin(), inner.end());
  pts.push_back(hi);
  QuadResult total;
  total.converged = true;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    QuadResult piece = integrate_log(f, pts[i], pts[i + 1], opts);
    total.value += piece.value;
    total.abs_error += piece.abs_error;
    total.evaluations += piece.evaluations;
    total.converged = total.converged && piece.converged;
  }
  return total;
}

}  // namespace levytail
