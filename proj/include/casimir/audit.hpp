#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casimir/dim_reduction.hpp"

namespace casimir {

struct GridPoint {
  double beta;
  double L;
  double m;
  double alpha;
};

struct ConsistencyReport {
  std::string identity_id;
  GridPoint point;
  double lhs;
  double rhs;
  double residual;
  double tolerance;
  // "as_printed" or "reconciled" for convention-sensitive identities,
  // "independent" otherwise.
  std::string convention;
  bool pass; // pass iff residual <= tolerance
};

/// Aggregate outcome of the identity suite. Each row reports its raw
/// residual; the summary fields encode the documented reading of the
/// sign tension: the bulk order-alpha piece as printed passes the
/// low-temperature cancellation but provably fails the
/// high-temperature match with residual 2 b1 pi^2 L/(45 beta^4), and
/// the unique convention restoring the high-temperature anchors is
/// named reconciling_convention. No row is ever auto-corrected.
struct IdentitySuiteResult {
  std::vector<ConsistencyReport> reports;
  // Convention whose bulk-piece sign the independent zeta-regularized
  // recomputation agrees with.
  std::string oracle_sign_verdict;
  // Unique convention whose high-temperature identity rows all pass on
  // grid points with b1 > 0; empty when none does.
  std::string reconciling_convention;
  bool reconciling_unique;
  // True when the grid exercises no order-alpha identity (alpha = 0
  // everywhere or no high-temperature points), making every convention
  // pass vacuously; the default convention is then reported.
  bool degenerate_alpha_zero;
  // True when the as-printed high-temperature residual equals the
  // predicted 2 b1 pi^2 L/(45 beta^4) on every applicable point, to
  // 1e-10 relative or to the double-precision assembly floor of the
  // compared totals, whichever is larger. At physical b1 the gap is a
  // ~1e-6 relative cancellation, so the floor is what binds there;
  // the strict 1e-10 regime is reachable by enlarging b1.
  bool tension_residual_confirmed;
  // Mode range of the discrete thermal sum fixed by the decomposition
  // identity: "integers".
  std::string lttt_m_range;
  // Image-group sign that satisfies the Neumann condition for the
  // scalar channel: "+" (the printed bracket's "-" realizes the
  // Dirichlet block instead).
  std::string neumann_image_group_sign;
  // Overall verdict assembled from: all convention-independent rows
  // pass, the as-printed low-temperature rows pass, a unique
  // reconciling convention exists, and the tension residual is
  // confirmed.
  bool check_passed;
};

/// Nine-point default grid: L in {0.5, 1, 2} crossed with
/// beta/L in {0.1, 1, 10}, m = 1000, alpha = 1/137.036.
std::vector<GridPoint> default_grid();

/// Evaluates identities I1 through I7 at each grid point under both
/// sign conventions where relevant, in deterministic order. Engine
/// failures at a point are recorded as failed rows with infinite
/// residual instead of aborting the suite. tol_override, when given,
/// replaces every per-identity tolerance (used to force failures from
/// the command line).
IdentitySuiteResult run_identity_suite(
    const std::vector<GridPoint>& grid, const SumConfig& cfg = {},
    std::optional<double> tol_override = std::nullopt);

/// Independent zeta-regularized recomputation of the bulk order-alpha
/// piece per unit b1. The transverse momentum integral of
/// k3^2/(omega_n^2 + k^2) continues to -|omega_n|/(4 pi) per mode and
/// the Matsubara cube sum to 2 (2 pi T)^3 zeta(-3), giving
/// -pi^2 L/(45 beta^4) with the sign derived, not assumed.
double zeta_reg_f1a_oracle(double beta, double L);

} // namespace casimir
