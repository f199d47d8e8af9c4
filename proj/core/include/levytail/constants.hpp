#pragma once

#include <map>
#include <optional>
#include <string>

namespace levytail {

// Pure constants of the explicit bounds. Each function raises AlphaOutOfRange
// outside the alpha domain where the constant is used.

// finite variation, alpha in (0,1)
double const_C1a(double alpha);
double const_C2a(double alpha);
double const_C1(double alpha);
double const_C2(double alpha);
double const_D1(double alpha);
double const_D2(double alpha);
double const_D3(double alpha);
double const_tildeD1(double alpha);

// infinite variation, alpha in [1,2)
double const_E1(double alpha);
double const_C(double alpha, double M);  // (1 ^ (2-alpha)/2M)^{1/alpha}
double const_L1(double alpha, double M);
double const_G1(double alpha, double M);
double const_G2(double alpha, double M);
double const_K1(double alpha);
double const_K2(double alpha);  // alpha in (1,2) only
double const_K3(double alpha);
double const_K4(double alpha);
double const_K5(double alpha, double eps);  // eps > 1
double const_K6(double alpha, double eps);
double const_F1(double alpha);
double const_F2(double alpha, double eps);
double const_F3(double alpha, double eps);
double const_F4(double alpha);
double const_F5(double alpha);

struct ConstantsTable {
  double alpha = 0.0;
  std::optional<double> M;
  std::optional<double> eps;
  std::map<std::string, double> entries;

  bool has(const std::string& name) const { return entries.count(name) != 0; }
  double at(const std::string& name) const;
};

// Every constant whose domain contains alpha; M- and eps-dependent entries
// only when the corresponding argument is supplied.
ConstantsTable constants(double alpha, std::optional<double> M = std::nullopt,
                         std::optional<double> eps = std::nullopt);

}  // namespace levytail
