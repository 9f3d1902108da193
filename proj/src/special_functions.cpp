#include "casimir/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} for k = 1..12, enough Euler-Maclaurin corrections to push the
// truncation error of a 30-term partial sum below 1e-15 for |s| <~ 10.
constexpr double kBernoulli[12] = {
    1.0 / 6.0,      -1.0 / 30.0,       1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,     -691.0 / 2730.0,   7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0, 854513.0 / 138.0,
    -236364091.0 / 2730.0};

// Partial sum plus Euler-Maclaurin continuation, valid for s > -23
// away from s = 1.
double zeta_euler_maclaurin(double s) {
  constexpr int N = 30;
  double sum = 0.0;
  for (int n = N - 1; n >= 1; --n) sum += std::pow(n, -s);
  sum += std::pow(N, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(N, -s);

  // Correction terms B_2k/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
  double pochhammer = s;
  double factorial = 2.0;
  double npow = std::pow(N, -s - 1.0);
  for (int k = 1; k <= 12; ++k) {
    sum += kBernoulli[k - 1] / factorial * pochhammer * npow;
    pochhammer *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    npow /= static_cast<double>(N) * N;
  }
  return sum;
}

} // namespace

double zeta(double s) {
  if (!std::isfinite(s)) throw std::domain_error("zeta: argument not finite");
  if (s == 1.0)
    throw std::domain_error("zeta: pole at s = 1");
  if (s >= -0.5) return zeta_euler_maclaurin(s);
  // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
  return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
         gamma_fn(1.0 - s) * zeta_euler_maclaurin(1.0 - s);
}

double gamma_fn(double x) {
  if (!std::isfinite(x))
    throw std::domain_error("gamma_fn: argument not finite");
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("gamma_fn: pole at " + std::to_string(x));
  if (x < 0.5) {
    // Reflection keeps the Lanczos series on its accurate half-line.
    return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
  }
  static const double g = 7.0;
  static const double p[9] = {0.99999999999980993,
                              676.5203681218851,
                              -1259.1392167224028,
                              771.32342877765313,
                              -176.61502916214059,
                              12.507343278686905,
                              -0.13857109526572012,
                              9.9843695780195716e-6,
                              1.5056327351493116e-7};
  const double z = x - 1.0;
  double series = p[0];
  for (int i = 1; i < 9; ++i) series += p[i] / (z + i);
  const double t = z + g + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

double polylog_neg(int p, double x) {
  if (x < 0.0 || x >= 1.0)
    throw std::domain_error("polylog_neg: x must lie in [0, 1)");
  const double u = 1.0 - x;
  switch (p) {
    case 0:
      return x / u;
    case 1:
      return x / (u * u);
    case 2:
      return x * (1.0 + x) / (u * u * u);
    default:
      throw std::invalid_argument("polylog_neg: order must be 0, 1 or 2");
  }
}

} // namespace casimir
