#include "casimir/thermodynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/special_functions.hpp"

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;

void check_step(const DerivativeConfig& dcfg) {
  if (!(dcfg.step_rel > 0.0) || !(dcfg.step_rel < 1e-2))
    throw std::invalid_argument(
        "derivative: step_rel must lie in (0, 1e-2)");
}

// Central difference of f at x with step h = x * step_rel.
template <typename F>
double central_diff(F&& f, double x, const DerivativeConfig& dcfg) {
  const double h = x * dcfg.step_rel;
  if (x + h == x)
    throw std::invalid_argument(
        "derivative: step collapsed below the working precision of x");
  if (dcfg.scheme == DiffScheme::central_2)
    return (f(x + h) - f(x - h)) / (2.0 * h);
  return (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) +
          f(x - 2.0 * h)) /
         (12.0 * h);
}

// Analytic -dF/dL of the regime closed forms; the bulk order-alpha
// piece is independent of L (b1 ~ 1/L cancels its explicit L), so the
// result holds under either sign convention.
double closed_form_force(const PlateSystem& sys, Regime regime) {
  const double L = sys.L;
  if (regime == Regime::LowT) {
    const double a = kPi * kPi / 720.0;
    const double b = a * 9.0 * sys.alpha / (32.0 * sys.m);
    return -3.0 * a / (L * L * L * L) + 4.0 * b / (L * L * L * L * L);
  }
  const double beta = sys.beta;
  const double z3 = zeta(3.0);
  const double c = z3 * 3.0 * sys.alpha / (16.0 * sys.m);
  return kPi * kPi / (45.0 * beta * beta * beta * beta) -
         z3 / (4.0 * kPi * beta * L * L * L) +
         3.0 * c / (8.0 * kPi * beta * L * L * L * L);
}

} // namespace

double casimir_force(const PlateSystem& sys, const SumConfig& cfg,
                     const DerivativeConfig& dcfg, SignConvention conv,
                     bool use_closed_form) {
  validate(sys);
  check_step(dcfg);
  const double bulk_pressure =
      kPi * kPi / (45.0 * sys.beta * sys.beta * sys.beta * sys.beta);

  const Regime regime = classify_regime(sys, cfg);
  double force;
  if (use_closed_form && regime != Regime::Crossover) {
    force = closed_form_force(sys, regime);
  } else {
    auto f_of_l = [&](double L) {
      PlateSystem s = sys;
      s.L = L;
      return total_free_energy(s, cfg, conv).total;
    };
    force = -central_diff(f_of_l, sys.L, dcfg);
  }
  if (dcfg.subtract_bulk) force -= bulk_pressure;
  return force;
}

double entropy(const PlateSystem& sys, const SumConfig& cfg,
               const DerivativeConfig& dcfg, SignConvention conv) {
  validate(sys);
  check_step(dcfg);
  auto f_of_beta = [&](double beta) {
    PlateSystem s = sys;
    s.beta = beta;
    return total_free_energy(s, cfg, conv).total;
  };
  double s_val =
      sys.beta * sys.beta * central_diff(f_of_beta, sys.beta, dcfg);
  if (dcfg.subtract_bulk)
    s_val -= 4.0 * kPi * kPi * sys.L /
             (45.0 * sys.beta * sys.beta * sys.beta);
  return s_val;
}

} // namespace casimir
