#pragma once

#include <map>
#include <optional>
#include <string>

#include "casimir/domain.hpp"
#include "casimir/mode_sum.hpp"

namespace casimir {

enum class Method { closed_low, closed_high, numeric };

const char* method_name(Method m);

struct FreeEnergyResult {
  double total; // per unit plate area, dimension length^-3
  std::map<std::string, double> parts;
  Method method;
  double error_bound;
  Regime regime;
  // Closed-form value of the matching temperature regime, absent in
  // the crossover where no closed form applies.
  std::optional<double> closed_regime_value;
};

/// Boundary part of the one-loop free energy, dimension length^-3:
///
///   G(beta, L) = (T/2pi) sum_{n in Z} int_{|omega_n|}^inf
///                  gamma log(1 - e^{-2 gamma L}) dgamma.
///
/// Evaluated with the image expansion of the logarithm and the moment
/// E1(a, c) = e^{-ac}(a/c + 1/c^2); the Matsubara sums close in
/// polylogarithms exactly as in inter_sum, the n = 0 row in
/// -T zeta(3)/(8 pi L^2). Always negative, increasing in L toward 0.
SumValue boundary_log_sum(double beta, double L, const SumConfig& cfg = {});

/// Truncated (n, j) double-sum check of boundary_log_sum, with the
/// same Euler-Maclaurin completion of the n = 0 row as
/// inter_sum_bruteforce.
SumValue boundary_log_sum_bruteforce(double beta, double L,
                                     const SumConfig& cfg = {});

/// One-loop free energy per unit area at any temperature:
///
///   F0 = -pi^2 L/(45 beta^4) + zeta(3)/(2 pi beta^3) + G(beta, L).
///
/// The first term is the bulk blackbody pressure between the plates;
/// the L-independent constant is fixed so the known high-temperature
/// closed form emerges from the decomposition. At low temperature the
/// three pieces cancel to -pi^2/720L^3 up to exponentially small
/// remainders, and that cancellation is asserted by the acceptance
/// suite rather than assumed.
FreeEnergyResult free_energy_F0(double beta, double L,
                                const SumConfig& cfg = {});

/// Zero-temperature plate free energy -pi^2/(720 L^3).
double casimir_lowT_free(double L);

} // namespace casimir
