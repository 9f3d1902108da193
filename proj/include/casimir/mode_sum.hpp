#pragma once

#include <stdexcept>

#include "casimir/domain.hpp"

namespace casimir {

/// Thrown when a series engine cannot meet its tolerance within the
/// configured truncation caps.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SumValue {
  double value;
  double error_bound; // rigorous tail bound, not a heuristic estimate
  long terms_used;
};

/// The thermal plate sum S(beta, L), dimension length^-3:
///
///   S = T sum_{n in Z} int d^2k/(2pi)^2 gamma / (e^{2 gamma L} - 1),
///   gamma = sqrt(omega_n^2 + k^2), omega_n = 2 pi n T.
///
/// The Bose factor is expanded in plate images e^{-2 j gamma L}; each
/// image integrates to the elementary moment
/// E2(a, c) = e^{-ac}(a^2/c + 2a/c^2 + 2/c^3) and the Matsubara sum of
/// the moments closes in negative-order polylogarithms of
/// x_j = e^{-4 pi j L T}. The n = 0 row is summed to zeta(3)/(8 pi L^3)
/// in closed form, so the image tail is geometric and the reported
/// error_bound is rigorous.
SumValue inter_sum(double beta, double L, const SumConfig& cfg = {});

/// Direct truncated double sum over (n, j) of the same E2 moments with
/// no polylog acceleration, kept as an independent check of inter_sum.
/// The power-law tail of the n = 0 row is completed by an elementary
/// Euler-Maclaurin estimate; everything else is truncated where the
/// terms underflow.
SumValue inter_sum_bruteforce(double beta, double L, const SumConfig& cfg = {});

/// (1/2pi) int_0^inf gamma^2 dgamma / (e^{2 gamma L} - 1)
///   = zeta(3) / (8 pi L^3),
/// the static-mode part of S that survives at high temperature.
double static_mode_integral(double L);

struct ResummationCheck {
  double lhs;
  double rhs;
  double residual;
};

/// Verifies the discrete-mode resummation
///   sum_{m in Z} 1/(gamma^2 + k_m^2) = (2L/gamma) [1/2 + 1/(e^{2 gamma L}-1)],
///   k_m = m pi / L,
/// summing |m| <= trunc plus a midpoint-rule arctangent tail estimate
/// on the left. rhs is the closed form; residual is relative.
ResummationCheck resummation_identity(double gamma, double L, long trunc);

/// Thermal part of the discrete-mode free energy between the plates,
///   (T/2pi) sum_{m in Z} k_m^2 (-log(1 - e^{-beta k_m})),
/// with the m range over all integers fixed by the exact decomposition
///   2L S = pi^2/240L^3 + pi^2 L/45 beta^4 - plate_thermal_sum
/// (checked in the audit suite). Dimension length^-3.
double plate_thermal_sum(double beta, double L);

} // namespace casimir
