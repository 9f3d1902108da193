#pragma once

#include <functional>

namespace casimir {

struct QuadratureResult {
  double value;
  double error_estimate;
  int subdivisions;
};

/// Adaptive Gauss-Kronrod (7, 15) integration of f over [a, b].
/// Bisects until the local Kronrod-minus-Gauss discrepancy meets the
/// requested tolerance. Intended for smooth integrands; the error
/// estimate is the accumulated discrepancy, not a strict bound.
QuadratureResult integrate(const std::function<double(double)>& f,
                           double a, double b,
                           double rel_tol = 1e-12, double abs_tol = 1e-300);

/// Integrates f over [a, infinity) via the rational map
/// x = a + t/(1-t), suitable for exponentially decaying tails.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double a,
                                       double rel_tol = 1e-12,
                                       double abs_tol = 1e-300);

} // namespace casimir
