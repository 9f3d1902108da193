#pragma once

#include "casimir/eft_correction.hpp"

namespace casimir {

enum class DiffScheme { central_2, central_4 };

struct DerivativeConfig {
  double step_rel = 1e-5; // must satisfy 0 < step_rel < 1e-2
  DiffScheme scheme = DiffScheme::central_2;
  bool subtract_bulk = false;
};

/// Casimir force per unit area, -dF/dL; negative values mean the
/// plates attract. Central finite differences on the numeric free
/// energy by default; with subtract_bulk the extensive blackbody part
/// (linear in L, a bulk pressure rather than a plate effect) is
/// removed before differentiating. When use_closed_form is set and the
/// system sits in a definite regime, the regime closed form is
/// differentiated analytically instead.
/// Throws std::invalid_argument when L * step_rel collapses to zero or
/// step_rel is outside its domain.
double casimir_force(const PlateSystem& sys, const SumConfig& cfg,
                     const DerivativeConfig& dcfg,
                     SignConvention conv = SignConvention::as_printed,
                     bool use_closed_form = false);

/// Entropy per unit area, S = beta^2 dF/dbeta, by central differences.
double entropy(const PlateSystem& sys, const SumConfig& cfg,
               const DerivativeConfig& dcfg,
               SignConvention conv = SignConvention::as_printed);

} // namespace casimir
