#include "casimir/free_field.hpp"

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

// e^{-ac} (a/c + 1/c^2), the gamma-integral over one image of one
// Matsubara mode of the log kernel.
double moment_e1(double a, double c) {
  return std::exp(-a * c) * (a / c + 1.0 / (c * c));
}

// sum_{j > J} j^-3 by Euler-Maclaurin through the B_4 term, M = J + 1.
double cubic_tail(long jmax) {
  const double m = static_cast<double>(jmax) + 1.0;
  const double m2 = m * m;
  return 0.5 / m2 + 0.5 / (m2 * m) + 0.25 / (m2 * m2) -
         1.0 / (12.0 * m2 * m2 * m2);
}

} // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::closed_low:
      return "closed_low";
    case Method::closed_high:
      return "closed_high";
    default:
      return "numeric";
  }
}

SumValue boundary_log_sum(double beta, double L, const SumConfig& cfg) {
  check_plate_args("boundary_log_sum", beta, L);
  const double t_temp = 1.0 / beta;
  const double two_pi_t = 2.0 * kPi * t_temp;
  const double prefactor = t_temp / (2.0 * kPi);
  const double static_row = -t_temp * zeta(3.0) / (8.0 * kPi * L * L);

  const double r = std::exp(-4.0 * kPi * L * t_temp);
  const double tail_factor = r / (1.0 - r);

  KahanSum images;
  long j = 0;
  double tail_bound = 0.0;
  for (;;) {
    ++j;
    if (j > cfg.max_image)
      throw ConvergenceError("boundary_log_sum: image expansion did not "
                             "reach tolerance within max_image terms");
    const double cj = 2.0 * j * L;
    const double xj = std::exp(-two_pi_t * cj);
    const double tj = (two_pi_t * 2.0 / cj * polylog_neg(1, xj) +
                       2.0 / (cj * cj) * polylog_neg(0, xj)) /
                      static_cast<double>(j);
    images.add(tj);
    tail_bound = prefactor * tj * tail_factor;
    const double total_so_far = static_row - prefactor * images.sum;
    if (tail_bound <= std::max(cfg.rel_tol * std::abs(total_so_far),
                               cfg.abs_tol))
      break;
  }
  return {static_row - prefactor * images.sum, tail_bound, j};
}

SumValue boundary_log_sum_bruteforce(double beta, double L,
                                     const SumConfig& cfg) {
  check_plate_args("boundary_log_sum_bruteforce", beta, L);
  const double t_temp = 1.0 / beta;
  const double two_pi_t = 2.0 * kPi * t_temp;
  const double prefactor = t_temp / (2.0 * kPi);
  const long jmax = cfg.oracle_j;

  KahanSum sum;
  long evaluations = 0;
  double last_thermal_row = 0.0;
  for (long j = 1; j <= jmax; ++j) {
    const double cj = 2.0 * j * L;
    const double inv_j = 1.0 / static_cast<double>(j);
    sum.add(inv_j * moment_e1(0.0, cj));
    ++evaluations;
    double thermal_row = 0.0;
    for (long n = 1; n <= cfg.max_matsubara; ++n) {
      const double e1 = moment_e1(two_pi_t * n, cj);
      ++evaluations;
      if (e1 == 0.0) break;
      thermal_row += 2.0 * inv_j * e1;
    }
    sum.add(thermal_row);
    if (j == jmax) last_thermal_row = thermal_row;
  }

  const double static_completion = cubic_tail(jmax) / (4.0 * L * L);
  const double r = std::exp(-4.0 * kPi * L * t_temp);
  const double big_m = static_cast<double>(jmax) + 1.0;
  const double m2 = big_m * big_m;
  const double err =
      prefactor * (last_thermal_row * r / (1.0 - r) +
                   1.0 / (m2 * m2 * m2 * m2) / (4.0 * L * L));
  return {-prefactor * (sum.sum + static_completion), err, evaluations};
}

FreeEnergyResult free_energy_F0(double beta, double L, const SumConfig& cfg) {
  check_plate_args("free_energy_F0", beta, L);
  const double blackbody = -kPi * kPi * L / (45.0 * beta * beta * beta * beta);
  const double plate_constant =
      zeta(3.0) / (2.0 * kPi * beta * beta * beta);
  const SumValue g = boundary_log_sum(beta, L, cfg);

  FreeEnergyResult out;
  out.parts["blackbody"] = blackbody;
  out.parts["plate_constant"] = plate_constant;
  out.parts["boundary_sum"] = g.value;
  out.total = blackbody + plate_constant + g.value;
  out.method = Method::numeric;
  out.error_bound = g.error_bound;
  out.regime = classify_regime({L, beta, 1.0, 0.0}, cfg);
  if (out.regime == Regime::LowT) {
    out.closed_regime_value = casimir_lowT_free(L);
  } else if (out.regime == Regime::HighT) {
    out.closed_regime_value =
        blackbody + plate_constant - zeta(3.0) / (8.0 * kPi * L * L * beta);
  }
  return out;
}

double casimir_lowT_free(double L) {
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::invalid_argument("casimir_lowT_free: L must be positive");
  return -kPi * kPi / (720.0 * L * L * L);
}

} // namespace casimir
