#pragma once

#include <string>
#include <vector>

namespace casimir {

/// Physical inputs in natural units (hbar = c = k_B = 1). All lengths
/// share one arbitrary unit; free energies per unit plate area then
/// carry dimension length^-3.
struct PlateSystem {
  double L;     // plate gap
  double beta;  // inverse temperature
  double m;     // electron mass
  double alpha; // fine-structure constant
};

/// Matching data of the boundary effective theory. At leading order in
/// alpha the three couplings coincide: e1 = e2 = b1.
struct EftCoefficients {
  double b1;
  double e1;
  double e2;
  double f_unit; // unit-operator coefficient of the static 3d theory
  double d1;     // surface-term coefficient, kept as metadata only
};

enum class Regime { LowT, HighT, Crossover };

const char* regime_name(Regime r);

/// Tolerances and truncation bounds shared by the series engines.
struct SumConfig {
  double rel_tol = 1e-11;
  double abs_tol = 1e-300;
  long max_image = 1000000;     // cap on the plate-image index j
  long max_matsubara = 1000000; // cap on |n| in brute-force paths
  long oracle_n = 2000;         // brute-force truncation in n
  long oracle_j = 2000;         // brute-force truncation in j
  double r_low = 5.0;           // beta/L >= r_low classifies as LowT
  double r_high = 5.0;          // L/beta >= r_high classifies as HighT
};

/// b1 = 3 alpha / (32 m L). Throws std::invalid_argument when m or L
/// is not positive.
double b1_coefficient(const PlateSystem& sys);

/// Fills the full coefficient set from a PlateSystem: e1 and e2 are
/// set to the identical b1 value, f_unit to the unit-operator
/// coefficient at that (beta, L), d1 to -3 alpha / 32.
EftCoefficients make_coefficients(const PlateSystem& sys);

/// Deterministic temperature-regime classification from the
/// thresholds in cfg. Numerical engines never consult the result; it
/// only selects which closed forms are quoted alongside numerics.
Regime classify_regime(const PlateSystem& sys, const SumConfig& cfg);

/// Rejects non-positive L, beta, m and alpha outside [0, 1) with
/// std::invalid_argument naming the offending field. Returns non-fatal
/// warnings when the inputs leave the domain of validity of the
/// effective description (m*L < 10 or m*beta < 10).
std::vector<std::string> validate(const PlateSystem& sys);

} // namespace casimir
