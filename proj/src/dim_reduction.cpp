#include "casimir/dim_reduction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/propagator.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/special_functions.hpp"

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

double unit_operator_f(double beta, double L, double b1) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("unit_operator_f: beta must be positive");
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::invalid_argument("unit_operator_f: L must be positive");
  return -kPi * kPi * L / (45.0 * beta * beta * beta) * (1.0 - b1) +
         zeta(3.0) / (2.0 * kPi * beta * beta);
}

double f0_3d(double L) {
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::invalid_argument("f0_3d: L must be positive");
  return -zeta(3.0) / (8.0 * kPi * L * L);
}

double f1_3d(double L, double e1, double e2) {
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::invalid_argument("f1_3d: L must be positive");
  return (e1 + e2) * zeta(3.0) / (8.0 * kPi * L * L);
}

double f1_3d_kernel_path(double L, double e1, double e2, double rel_tol) {
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::invalid_argument("f1_3d_kernel_path: L must be positive");
  const QuadratureResult scalar = integrate_to_infinity(
      [L](double g) { return g * integrated_coincident_kernel(g, L); }, 0.0,
      rel_tol);
  const QuadratureResult gauge = integrate_to_infinity(
      [L](double g) { return g * gauge_kernel_value(g, L, 2); }, 0.0,
      rel_tol);
  return (e1 * scalar.value - e2 * gauge.value) / (2.0 * kPi);
}

MatchReport match_highT(const PlateSystem& sys, SignConvention conv,
                        const SumConfig& cfg) {
  validate(sys);
  const double b1 = b1_coefficient(sys);
  // The nonstatic modes feed the bulk order-alpha piece into the unit
  // operator, so its b1 term carries the same sign choice as f1a and
  // the two sides stay algebraically identical under either reading.
  const double signed_b1 =
      conv == SignConvention::reconciled ? b1 : -b1;
  const double t_temp = 1.0 / sys.beta;
  const double lhs = t_temp * (unit_operator_f(sys.beta, sys.L, signed_b1) +
                               f0_3d(sys.L) + f1_3d(sys.L, b1, b1));
  double rhs = two_loop_highT(sys.beta, sys.L, sys.m, sys.alpha);
  if (conv == SignConvention::as_printed)
    rhs += 2.0 * f1a(sys.beta, sys.L, b1, conv);

  MatchReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.residual = std::abs(lhs - rhs) / std::abs(rhs);
  rep.convention = conv;
  rep.high_t_regime = classify_regime(sys, cfg) == Regime::HighT;
  return rep;
}

} // namespace casimir
