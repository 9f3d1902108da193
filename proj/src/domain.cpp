#include "casimir/domain.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/dim_reduction.hpp"

namespace casimir {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::LowT:
      return "low_t";
    case Regime::HighT:
      return "high_t";
    default:
      return "crossover";
  }
}

double b1_coefficient(const PlateSystem& sys) {
  if (!(sys.m > 0.0))
    throw std::invalid_argument("b1_coefficient: m must be positive");
  if (!(sys.L > 0.0))
    throw std::invalid_argument("b1_coefficient: L must be positive");
  return 3.0 * sys.alpha / (32.0 * sys.m * sys.L);
}

EftCoefficients make_coefficients(const PlateSystem& sys) {
  const double b1 = b1_coefficient(sys);
  EftCoefficients c;
  c.b1 = b1;
  c.e1 = b1;
  c.e2 = b1;
  c.f_unit = unit_operator_f(sys.beta, sys.L, b1);
  c.d1 = -3.0 * sys.alpha / 32.0;
  return c;
}

Regime classify_regime(const PlateSystem& sys, const SumConfig& cfg) {
  const double ratio = sys.beta / sys.L;
  if (ratio >= cfg.r_low) return Regime::LowT;
  if (1.0 / ratio >= cfg.r_high) return Regime::HighT;
  return Regime::Crossover;
}

std::vector<std::string> validate(const PlateSystem& sys) {
  if (!(sys.L > 0.0) || !std::isfinite(sys.L))
    throw std::invalid_argument("validate: L must be positive and finite");
  if (!(sys.beta > 0.0) || !std::isfinite(sys.beta))
    throw std::invalid_argument("validate: beta must be positive and finite");
  if (!(sys.m > 0.0) || !std::isfinite(sys.m))
    throw std::invalid_argument("validate: m must be positive and finite");
  if (sys.alpha < 0.0 || sys.alpha >= 1.0 || !std::isfinite(sys.alpha))
    throw std::invalid_argument("validate: alpha must lie in [0, 1)");

  std::vector<std::string> warnings;
  if (sys.m * sys.L < 10.0)
    warnings.push_back(
        "m*L < 10: gap is not large against the inverse electron mass, "
        "the boundary expansion in 1/(m*L) is unreliable here");
  if (sys.m * sys.beta < 10.0)
    warnings.push_back(
        "m*beta < 10: temperature is not small against the electron mass, "
        "virtual pair excitations are not negligible here");
  return warnings;
}

} // namespace casimir
