#include "casimir/mode_sum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/special_functions.hpp"

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;

void check_plate_args(const char* who, double beta, double L) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::invalid_argument(std::string(who) + ": beta must be positive");
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::invalid_argument(std::string(who) + ": L must be positive");
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Matsubara-summed transverse moments of image j, with the static
// (n = 0) contribution removed; that row is handled in closed form.
double image_term(double two_pi_t, double cj, double xj) {
  const double li2 = polylog_neg(2, xj);
  const double li1 = polylog_neg(1, xj);
  const double li0 = polylog_neg(0, xj);
  return two_pi_t * two_pi_t * 2.0 * li2 / cj +
         two_pi_t * 4.0 * li1 / (cj * cj) + 4.0 * li0 / (cj * cj * cj);
}

// e^{-ac} (a^2/c + 2a/c^2 + 2/c^3), the k-integral over one image of
// one Matsubara mode.
double moment_e2(double a, double c) {
  return std::exp(-a * c) *
         (a * a / c + 2.0 * a / (c * c) + 2.0 / (c * c * c));
}

} // namespace

SumValue inter_sum(double beta, double L, const SumConfig& cfg) {
  check_plate_args("inter_sum", beta, L);
  const double t_temp = 1.0 / beta;
  const double two_pi_t = 2.0 * kPi * t_temp;
  const double prefactor = t_temp / (2.0 * kPi);
  const double static_row = t_temp * zeta(3.0) / (8.0 * kPi * L * L * L);

  // Image-to-image decay ratio; every polylog piece contracts at least
  // this fast, so the tail after term j is bounded by t_j r/(1-r).
  const double r = std::exp(-4.0 * kPi * L * t_temp);
  const double tail_factor = r / (1.0 - r);

  KahanSum images;
  long j = 0;
  double tail_bound = 0.0;
  for (;;) {
    ++j;
    if (j > cfg.max_image)
      throw ConvergenceError("inter_sum: image expansion did not reach "
                             "tolerance within max_image terms");
    const double cj = 2.0 * j * L;
    const double xj = std::exp(-two_pi_t * cj);
    const double tj = image_term(two_pi_t, cj, xj);
    images.add(tj);
    tail_bound = prefactor * tj * tail_factor;
    const double total_so_far = static_row + prefactor * images.sum;
    if (tail_bound <= std::max(cfg.rel_tol * std::abs(total_so_far),
                               cfg.abs_tol))
      break;
  }
  return {static_row + prefactor * images.sum, tail_bound, j};
}

SumValue inter_sum_bruteforce(double beta, double L, const SumConfig& cfg) {
  check_plate_args("inter_sum_bruteforce", beta, L);
  const double t_temp = 1.0 / beta;
  const double two_pi_t = 2.0 * kPi * t_temp;
  const double prefactor = t_temp / (2.0 * kPi);
  const long jmax = cfg.oracle_j;

  KahanSum sum;
  long evaluations = 0;
  double last_thermal_row = 0.0;
  for (long j = 1; j <= jmax; ++j) {
    const double cj = 2.0 * j * L;
    sum.add(moment_e2(0.0, cj));
    ++evaluations;
    double thermal_row = 0.0;
    for (long n = 1; n <= cfg.max_matsubara; ++n) {
      const double e2 = moment_e2(two_pi_t * n, cj);
      ++evaluations;
      if (e2 == 0.0) break;
      thermal_row += 2.0 * e2;
    }
    sum.add(thermal_row);
    if (j == jmax) last_thermal_row = thermal_row;
  }

  // Completion of the static row beyond jmax: the remaining
  // sum_{j > jmax} j^-3 by Euler-Maclaurin through the B_4 term.
  const double big_m = static_cast<double>(jmax) + 1.0;
  const double m2 = big_m * big_m;
  const double static_tail =
      0.5 / m2 + 0.5 / (m2 * big_m) + 0.25 / (m2 * m2) -
      1.0 / (12.0 * m2 * m2 * m2);
  const double static_completion = static_tail / (4.0 * L * L * L);

  // Thermal rows beyond jmax contract geometrically in j (every
  // exponent gains at least 4 pi L T per image); the Euler-Maclaurin
  // remainder for the static row is below its next 1/M^8 term.
  const double r = std::exp(-4.0 * kPi * L * t_temp);
  const double err = prefactor * (last_thermal_row * r / (1.0 - r) +
                                  1.0 / (m2 * m2 * m2 * m2) /
                                      (4.0 * L * L * L));
  return {prefactor * (sum.sum + static_completion), err, evaluations};
}

double static_mode_integral(double L) {
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::invalid_argument("static_mode_integral: L must be positive");
  return zeta(3.0) / (8.0 * kPi * L * L * L);
}

ResummationCheck resummation_identity(double gamma, double L, long trunc) {
  if (!(gamma > 0.0))
    throw std::invalid_argument("resummation_identity: gamma must be positive");
  if (!(L > 0.0))
    throw std::invalid_argument("resummation_identity: L must be positive");
  if (trunc < 1)
    throw std::invalid_argument("resummation_identity: trunc must be >= 1");

  KahanSum s;
  s.add(1.0 / (gamma * gamma));
  for (long m = 1; m <= trunc; ++m) {
    const double km = m * kPi / L;
    s.add(2.0 / (gamma * gamma + km * km));
  }
  // Midpoint-rule completion of the tail: sum_{|m| > trunc} collapses
  // onto 2 int_{trunc+1/2}^inf dm / (gamma^2 + (m pi/L)^2).
  const double tail = 2.0 * (L / (kPi * gamma)) *
                      (kPi / 2.0 -
                       std::atan((trunc + 0.5) * kPi / (L * gamma)));
  const double lhs = s.sum + tail;
  const double rhs = (L / gamma) / std::tanh(gamma * L);
  return {lhs, rhs, std::abs(lhs - rhs) / std::abs(rhs)};
}

double plate_thermal_sum(double beta, double L) {
  check_plate_args("plate_thermal_sum", beta, L);
  constexpr long kCap = 10000000;
  const double prefactor = 1.0 / (2.0 * kPi * beta);

  KahanSum s;
  for (long m = 1;; ++m) {
    if (m > kCap)
      throw ConvergenceError("plate_thermal_sum: mode sum did not converge "
                             "within the mode cap");
    const double km = m * kPi / L;
    const double y = std::exp(-beta * km);
    const double term = 2.0 * km * km * (-std::log1p(-y));
    s.add(term);
    if (term == 0.0) break;
    // -log(1-y) <= y/(1-y) and k^2 e^{-beta k} contracts by at least
    // e^{-beta pi/L} (1 + 1/m)^2 per step once that ratio is < 1.
    const double ratio = std::exp(-beta * kPi / L) *
                         (1.0 + 1.0 / m) * (1.0 + 1.0 / m);
    if (ratio < 1.0) {
      const double km1 = (m + 1) * kPi / L;
      const double y1 = std::exp(-beta * km1);
      const double head = 2.0 * km1 * km1 * y1 / (1.0 - y1);
      if (head / (1.0 - ratio) <= 1e-16 * s.sum) break;
    }
  }
  return prefactor * s.sum;
}

} // namespace casimir
