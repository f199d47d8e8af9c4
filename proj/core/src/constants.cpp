#include "levytail/constants.hpp"

#include <cmath>
#include <numbers>

#include "levytail/errors.hpp"

namespace levytail {
namespace {

const double kE21e = std::exp(2.0 + 1.0 / std::numbers::e);  // e^{2+1/e}
const double kE31e = std::exp(3.0 + 1.0 / std::numbers::e);  // e^{3+1/e}

void require_fv(double a, const char* name) {
  if (!(a > 0.0 && a < 1.0)) raise(ErrorCode::AlphaOutOfRange, std::string(name) + " requires alpha in (0,1)");
}

void require_iv(double a, const char* name) {
  if (!(a >= 1.0 && a < 2.0)) raise(ErrorCode::AlphaOutOfRange, std::string(name) + " requires alpha in [1,2)");
}

void require_eps(double eps) {
  if (!(eps > 0.0)) raise(ErrorCode::InvalidCutoff, "eps-branch constants require eps > 0");
}

double p2(double x) { return std::pow(2.0, x); }

}  // namespace

double const_C1a(double a) {
  require_fv(a, "C1a");
  return p2(1.0 + 4.0 * a) / (a * (2.0 - a));
}

double const_C2a(double a) {
  require_fv(a, "C2a");
  const double d = a * (2.0 - a);
  return p2(2.0 + a) / (1.0 - a) +
         p2(4.0 * a + 3.0) * (p2(1.0 - a) * d + 2.0 + a) / (d * (1.0 - a) * std::pow(3.0, 1.0 + a)) +
         28.0 * std::pow(4.0, 2.0 * a) / (a * a * (2.0 - a)) + p2(1.0 + 4.0 * a) / d;
}

double const_C1(double a) { return 16.0 + 64.0 / (a * a) + const_C1a(a) + const_C2a(a); }

double const_C2(double a) {
  require_fv(a, "C2");
  return 3.0 * p2(2.0 * a - 1.0) * kE21e / ((2.0 - a) * (2.0 - a)) +
         std::pow(4.0, 1.0 + a) / (a * (1.0 - a) * (2.0 - a)) + std::pow(4.0, a) / (a * a);
}

double const_D1(double a) {
  require_fv(a, "D1");
  return 4.0 / (1.0 - a) * (3.0 + (2.0 + a) / (a * (2.0 - a)));
}

double const_D2(double a) {
  require_fv(a, "D2");
  return 4.0 * (1.0 / (2.0 - a) + 1.0 + p2(a) * (2.0 + (2.0 + a) / (a * (2.0 - a))));
}

double const_D3(double a) {
  require_fv(a, "D3");
  return 2.0 * (2.0 + a) / ((2.0 - a) * a * (1.0 - a));
}

double const_tildeD1(double a) {
  require_fv(a, "tildeD1");
  return 5.0 / (1.0 - a) + 10.0 / (a * (2.0 - a) * (1.0 - a));
}

double const_E1(double a) {
  require_iv(a, "E1");
  return 4.0 * kE21e / ((2.0 - a) * (2.0 - a)) + std::pow(4.0, 1.0 + a) / (a * a) +
         p2(a + 1.0) / (9.0 * a * (2.0 - a));
}

double const_C(double a, double M) {
  require_iv(a, "C");
  if (!(M > 0.0)) raise(ErrorCode::InvalidArgument, "C requires M > 0");
  return std::pow(std::min(1.0, (2.0 - a) / (2.0 * M)), 1.0 / a);
}

double const_L1(double a, double M) {
  const double C = const_C(a, M);
  double v = 2.0 * M / C + 4.0 * M / C;
  if (a > 1.0) v += 24.0 * M * M * std::pow(C, a - 1.0) / (a * (2.0 - a) * (a - 1.0));
  return v;
}

double const_G1(double a, double M) {
  double v = const_L1(a, M);
  if (a > 1.0) {
    v += p2(2.0 + a) * M * (1.0 + M / (a * (2.0 - a) * (a - 1.0)));
  } else {
    v += 4.0 * M * M * (kE21e + 37.0 / 9.0) + 4.0 * M;
  }
  return v;
}

double const_G2(double a, double M) {
  require_iv(a, "G2");
  double v = 8.0 * M * M / (a * (2.0 - a));
  if (a > 1.0) v += M * M * const_E1(a);
  return v;
}

double const_K1(double a) {
  require_iv(a, "K1");
  return std::pow(4.0, 1.0 + a) * (kE21e / ((2.0 - a) * (2.0 - a)) + 1.0 / (a * a));
}

double const_K2(double a) {
  if (!(a > 1.0 && a < 2.0)) raise(ErrorCode::AlphaOutOfRange, "K2 requires alpha in (1,2)");
  return p2(1.0 + 3.0 * a) / (a * (2.0 - a) * (a - 1.0));
}

double const_K3(double a) {
  require_iv(a, "K3");
  return p2(3.0 * (1.0 + a)) * kE31e / (a * std::pow(2.0 - a, 3.0));
}

double const_K4(double a) {
  require_iv(a, "K4");
  double v = p2(2.0 * a - 1.0) / (a * (2.0 - a) * (2.0 - a)) +
             p2(4.0 * a + 1.0) / (std::pow(21.0, a) * a * (2.0 - a)) + p2(2.0 * a + 2.0) / (a * (2.0 - a));
  // The 1/(alpha-1) addend is undefined at alpha = 1 and is omitted there.
  if (a > 1.0) v += p2(3.0 * a) / (a * (a - 1.0) * (2.0 - a));
  return v;
}

double const_K5(double a, double eps) {
  require_iv(a, "K5");
  require_eps(eps);
  if (!(eps > 1.0)) raise(ErrorCode::InvalidCutoff, "K5 is defined for eps > 1");
  if (eps < 1.5) {
    double v = 8.0 * std::pow(0.75, 2.0 - a) / (a * (2.0 - a) * (2.0 - a));
    if (a > 1.0) v += p2(3.0 * a) / (a * (a - 1.0) * (2.0 - a));
    return v;
  }
  return std::pow(4.0, 1.0 + a) / (std::pow(3.0, a) * (2.0 - a));
}

double const_K6(double a, double eps) {
  require_iv(a, "K6");
  require_eps(eps);
  if (eps < 1.5) return p2(2.0 * a + 1.0) / (std::pow(3.0, a) * (2.0 - a));
  return 2.0 * std::pow(4.0 / 3.0, a) / (2.0 - a);
}

double const_F1(double a) {
  double v = 2.0 * const_K1(a) + const_K4(a) + 6.0 / (a * a);
  if (a > 1.0) v += 2.0 * const_K2(a);
  else v += 64.0 * std::numbers::ln2;
  return v;
}

double const_F2(double a, double eps) { return const_K6(a, eps); }

double const_F3(double a, double eps) { return const_K5(a, eps); }

double const_F4(double a) {
  double v = 2.0 * const_K1(a) + 6.0 / (a * a);
  if (a > 1.0) v += 2.0 * const_K2(a);
  else v += 64.0 * std::numbers::ln2;
  return v;
}

double const_F5(double a) { return 2.0 * const_K3(a); }

double ConstantsTable::at(const std::string& name) const {
  auto it = entries.find(name);
  if (it == entries.end()) raise(ErrorCode::AlphaOutOfRange, "constant " + name + " is not defined for this alpha/M/eps");
  return it->second;
}

ConstantsTable constants(double alpha, std::optional<double> M, std::optional<double> eps) {
  if (!(alpha > 0.0 && alpha < 2.0)) raise(ErrorCode::AlphaOutOfRange, "alpha must lie in (0,2)");
  if (M && !(*M > 0.0)) raise(ErrorCode::InvalidArgument, "M must be positive");
  if (eps) require_eps(*eps);
  ConstantsTable t;
  t.alpha = alpha;
  t.M = M;
  t.eps = eps;
  auto& e = t.entries;
  if (alpha < 1.0) {
    e["C1a"] = const_C1a(alpha);
    e["C2a"] = const_C2a(alpha);
    e["C1"] = const_C1(alpha);
    e["C2"] = const_C2(alpha);
    e["D1"] = const_D1(alpha);
    e["D2"] = const_D2(alpha);
    e["D3"] = const_D3(alpha);
    e["tildeD1"] = const_tildeD1(alpha);
    return t;
  }
  e["E1"] = const_E1(alpha);
  e["K1"] = const_K1(alpha);
  if (alpha > 1.0) e["K2"] = const_K2(alpha);
  e["K3"] = const_K3(alpha);
  e["K4"] = const_K4(alpha);
  e["F1"] = const_F1(alpha);
  e["F4"] = const_F4(alpha);
  e["F5"] = const_F5(alpha);
  if (M) {
    e["C"] = const_C(alpha, *M);
    e["L1"] = const_L1(alpha, *M);
    e["G1"] = const_G1(alpha, *M);
    e["G2"] = const_G2(alpha, *M);
  }
  if (eps) {
    e["K6"] = const_K6(alpha, *eps);
    e["F2"] = const_F2(alpha, *eps);
    if (*eps > 1.0) {
      e["K5"] = const_K5(alpha, *eps);
      e["F3"] = const_F3(alpha, *eps);
    }
  }
  return t;
}

}  // namespace levytail
