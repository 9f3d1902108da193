#include "casimir/eft_correction.hpp"

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

} // namespace

const char* convention_name(SignConvention c) {
  return c == SignConvention::as_printed ? "as_printed" : "reconciled";
}

double f1a(double beta, double L, double b1, SignConvention conv) {
  check_plate_args("f1a", beta, L);
  const double magnitude =
      b1 * kPi * kPi * L / (45.0 * beta * beta * beta * beta);
  return conv == SignConvention::as_printed ? -magnitude : magnitude;
}

SumValue f1b(double beta, double L, double b1, const SumConfig& cfg) {
  const SumValue s = inter_sum(beta, L, cfg);
  return {b1 * 2.0 * L * s.value, std::abs(b1) * 2.0 * L * s.error_bound,
          s.terms_used};
}

double f1b_lowT_closed(double beta, double L, double b1) {
  check_plate_args("f1b_lowT_closed", beta, L);
  return b1 * (kPi * kPi / (240.0 * L * L * L) +
               kPi * kPi * L / (45.0 * beta * beta * beta * beta));
}

double f1b_highT_closed(double beta, double L, double b1) {
  check_plate_args("f1b_highT_closed", beta, L);
  return b1 * zeta(3.0) / (4.0 * kPi * beta * L * L);
}

double two_loop_lowT(double L, double m, double alpha) {
  const double b1 = b1_coefficient({L, 1.0, m, alpha});
  return -kPi * kPi / (720.0 * L * L * L) * (1.0 - 3.0 * b1);
}

double two_loop_highT(double beta, double L, double m, double alpha) {
  check_plate_args("two_loop_highT", beta, L);
  const double b1 = b1_coefficient({L, beta, m, alpha});
  const double z3 = zeta(3.0);
  return -kPi * kPi * L / (45.0 * beta * beta * beta * beta) * (1.0 - b1) +
         z3 / (2.0 * kPi * beta * beta * beta) -
         z3 / (8.0 * kPi * beta * L * L) * (1.0 - 2.0 * b1);
}

FreeEnergyResult total_free_energy(const PlateSystem& sys,
                                   const SumConfig& cfg, SignConvention conv) {
  validate(sys);
  const double b1 = b1_coefficient(sys);
  FreeEnergyResult out = free_energy_F0(sys.beta, sys.L, cfg);
  const double a_term = f1a(sys.beta, sys.L, b1, conv);
  const SumValue b_term = f1b(sys.beta, sys.L, b1, cfg);
  out.parts["order_alpha_a"] = a_term;
  out.parts["order_alpha_b"] = b_term.value;
  out.total += a_term + b_term.value;
  out.error_bound += b_term.error_bound;
  out.regime = classify_regime(sys, cfg);
  if (out.regime == Regime::LowT) {
    out.closed_regime_value = two_loop_lowT(sys.L, sys.m, sys.alpha);
  } else if (out.regime == Regime::HighT) {
    out.closed_regime_value = two_loop_highT(sys.beta, sys.L, sys.m, sys.alpha);
  } else {
    out.closed_regime_value.reset();
  }
  return out;
}

} // namespace casimir
