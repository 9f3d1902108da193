#include "casimir/audit.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "casimir/propagator.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/thermodynamics.hpp"

namespace casimir {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Evaluates one identity row, converting engine failures into a failed
// row with infinite residual so one bad point cannot abort the suite.
void push_row(std::vector<ConsistencyReport>& rows, const std::string& id,
              const GridPoint& p, const std::string& convention, double tol,
              bool relative,
              const std::function<std::pair<double, double>()>& sides) {
  ConsistencyReport row;
  row.identity_id = id;
  row.point = p;
  row.convention = convention;
  row.tolerance = tol;
  try {
    const auto [lhs, rhs] = sides();
    row.lhs = lhs;
    row.rhs = rhs;
    row.residual = std::abs(lhs - rhs);
    if (relative) row.residual /= std::abs(rhs);
  } catch (const std::exception&) {
    row.lhs = kNan;
    row.rhs = kNan;
    row.residual = kInf;
  }
  row.pass = row.residual <= row.tolerance;
  rows.push_back(row);
}

double tension_prediction(const GridPoint& p, double b1) {
  return 2.0 * b1 * kPi * kPi * p.L /
         (45.0 * p.beta * p.beta * p.beta * p.beta);
}

// Finite-difference slope of the scalar propagator at the z = 0 plate
// for either choice of relative sign between the two image groups,
// normalized by the propagator value. The sign satisfying the Neumann
// condition drives this to zero linearly in eps.
double plate_slope(double gamma, double L, double group_sign, double eps) {
  const double zp = L / 3.0;
  auto d = [&](double z) {
    const double u = z + zp;
    const double v = z - zp;
    const double images =
        (std::exp(-gamma * u) + std::exp(-gamma * (2.0 * L - u)) +
         group_sign * (std::exp(-gamma * (2.0 * L - v)) +
                       std::exp(-gamma * (2.0 * L + v)))) /
        (-std::expm1(-2.0 * gamma * L));
    return (std::exp(-gamma * std::abs(v)) + group_sign * images) /
           (2.0 * gamma);
  };
  return std::abs(d(eps) - d(0.0)) / eps / std::abs(d(eps));
}

} // namespace

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> grid;
  for (double L : {0.5, 1.0, 2.0})
    for (double ratio : {0.1, 1.0, 10.0})
      grid.push_back({ratio * L, L, 1000.0, 1.0 / 137.036});
  return grid;
}

double zeta_reg_f1a_oracle(double beta, double L) {
  if (!(beta > 0.0) || !(L > 0.0))
    throw std::invalid_argument(
        "zeta_reg_f1a_oracle: beta and L must be positive");
  const double t_temp = 1.0 / beta;
  // Regularized sum over modes of |omega_n|^3: the n = 0 term is zero
  // and each sign of n contributes (2 pi T)^3 n^3, continued to
  // zeta(-3).
  const double cube_sum =
      2.0 * std::pow(2.0 * kPi * t_temp, 3) * zeta(-3.0);
  // Transverse integral of k3^2/(omega^2 + k^2) continues to
  // -|omega|/(4 pi); the remaining factors are the 2L volume, the
  // Matsubara T, and the vertex 1/(12 pi) normalization carried along.
  return -(2.0 * L / (12.0 * kPi)) * t_temp * cube_sum;
}

IdentitySuiteResult run_identity_suite(const std::vector<GridPoint>& grid,
                                       const SumConfig& cfg,
                                       std::optional<double> tol_override) {
  IdentitySuiteResult out;
  auto tol = [&tol_override](double fallback) {
    return tol_override ? *tol_override : fallback;
  };

  for (const GridPoint& p : grid) {
    const PlateSystem sys{p.L, p.beta, p.m, p.alpha};
    const double b1 = b1_coefficient(sys);
    const bool low_t = p.beta / p.L >= cfg.r_low;
    const bool high_t = p.L / p.beta >= cfg.r_high;

    push_row(out.reports, "I1", p, "independent", tol(1e-10), true, [&] {
      return std::make_pair(inter_sum(p.beta, p.L, cfg).value,
                            inter_sum_bruteforce(p.beta, p.L, cfg).value);
    });

    if (low_t) {
      for (SignConvention conv :
           {SignConvention::as_printed, SignConvention::reconciled}) {
        push_row(out.reports, "I2", p, convention_name(conv),
                 tol(1e-8 * b1 / (p.L * p.L * p.L)), false, [&] {
                   const double lhs = f1a(p.beta, p.L, b1, conv) +
                                      f1b(p.beta, p.L, b1, cfg).value;
                   const double rhs =
                       b1 * kPi * kPi / (240.0 * p.L * p.L * p.L);
                   return std::make_pair(lhs, rhs);
                 });
      }
    }

    push_row(out.reports, "I2b", p, "independent", tol(1e-9), true, [&] {
      const double lhs = 2.0 * p.L * inter_sum(p.beta, p.L, cfg).value;
      const double rhs =
          kPi * kPi / (240.0 * p.L * p.L * p.L) +
          kPi * kPi * p.L /
              (45.0 * p.beta * p.beta * p.beta * p.beta) -
          plate_thermal_sum(p.beta, p.L);
      return std::make_pair(lhs, rhs);
    });

    if (p.beta / p.L >= 8.0) {
      push_row(out.reports, "I3", p, "independent",
               tol(1e-7 / (p.L * p.L * p.L)), false, [&] {
                 return std::make_pair(free_energy_F0(p.beta, p.L, cfg).total,
                                       casimir_lowT_free(p.L));
               });
    }

    if (high_t) {
      for (SignConvention conv :
           {SignConvention::as_printed, SignConvention::reconciled}) {
        push_row(out.reports, "I4", p, convention_name(conv), tol(1e-10),
                 true, [&] {
                   return std::make_pair(
                       total_free_energy(sys, cfg, conv).total,
                       two_loop_highT(p.beta, p.L, p.m, p.alpha));
                 });
      }
    }

    push_row(out.reports, "I5", p, "independent", tol(1e-12), true, [&] {
      const MatchReport rep =
          match_highT(sys, SignConvention::reconciled, cfg);
      return std::make_pair(rep.lhs, rep.rhs);
    });
  }

  // Fixed probes, independent of the grid. For these rows the first
  // point field holds the transverse energy gamma instead of beta.
  for (auto [gamma, len] : {std::pair{1.0, 1.0}, {2.0, 0.5}, {0.7, 1.5}}) {
    push_row(out.reports, "I6", {gamma, len, 0.0, 0.0}, "independent",
             tol(1e-8), true, [g = gamma, l = len] {
               const ResummationCheck c = resummation_identity(g, l, 10000);
               return std::make_pair(c.lhs, c.rhs);
             });
  }
  for (double gl : {0.1, 1.0, 5.0, 20.0}) {
    push_row(out.reports, "I7", {gl, 1.0, 0.0, 0.0}, "independent",
             tol(1e-10), false, [gl] {
               return std::make_pair(coincident_kernel_quadrature(gl, 1.0),
                                     integrated_coincident_kernel(gl, 1.0));
             });
  }

  // Sign verdict of the independent zeta-regularized recomputation,
  // derived by comparing against both conventions at a fixed probe.
  {
    const double oracle = zeta_reg_f1a_oracle(1.0, 1.0);
    const double printed = f1a(1.0, 1.0, 1.0, SignConvention::as_printed);
    const double flipped = f1a(1.0, 1.0, 1.0, SignConvention::reconciled);
    if (std::abs(oracle - printed) <= 1e-12 * std::abs(oracle))
      out.oracle_sign_verdict = "as_printed";
    else if (std::abs(oracle - flipped) <= 1e-12 * std::abs(oracle))
      out.oracle_sign_verdict = "reconciled";
    else
      out.oracle_sign_verdict = "neither";
  }

  // Reconciling convention: the unique one whose high-temperature rows
  // all pass where the order-alpha sector is actually exercised.
  bool any_alpha_rows = false;
  bool ap_all = true, rec_all = true;
  bool tension_ok = true;
  bool i2_printed_ok = true;
  bool independent_ok = true;
  bool i2b_ok = true;
  for (const ConsistencyReport& row : out.reports) {
    if (row.identity_id == "I4") {
      const double row_b1 = b1_coefficient(
          {row.point.L, row.point.beta, row.point.m, row.point.alpha});
      if (row_b1 > 0.0) {
        any_alpha_rows = true;
        if (row.convention == "as_printed") {
          ap_all = ap_all && row.pass;
          if (!row.pass) {
            const double predicted = tension_prediction(row.point, row_b1);
            const double gap = std::abs(row.lhs - row.rhs);
            // The gap is a near-complete cancellation of totals whose
            // assembly magnitude is |rhs|, so the comparison cannot be
            // sharper than a few tens of ulps at that magnitude.
            const double noise_floor =
                64.0 * std::numeric_limits<double>::epsilon() *
                std::abs(row.rhs);
            if (std::abs(gap - predicted) >
                std::max(1e-10 * predicted, noise_floor))
              tension_ok = false;
          }
        } else {
          rec_all = rec_all && row.pass;
        }
      }
    }
    if (row.identity_id == "I2" && row.convention == "as_printed")
      i2_printed_ok = i2_printed_ok && row.pass;
    if (row.convention == "independent")
      independent_ok = independent_ok && row.pass;
    if (row.identity_id == "I2b") i2b_ok = i2b_ok && row.pass;
  }

  out.degenerate_alpha_zero = !any_alpha_rows;
  if (out.degenerate_alpha_zero) {
    out.reconciling_convention = "as_printed";
    out.reconciling_unique = false;
    out.tension_residual_confirmed = true;
  } else {
    const int winners = (ap_all ? 1 : 0) + (rec_all ? 1 : 0);
    out.reconciling_unique = winners == 1;
    out.reconciling_convention =
        winners == 1 ? (ap_all ? "as_printed" : "reconciled")
                     : (winners == 0 ? "" : "ambiguous");
    out.tension_residual_confirmed = tension_ok && !ap_all;
  }

  out.lttt_m_range = i2b_ok ? "integers" : "undetermined";

  // The image-group sign is measured, not assumed: the plate slope of
  // the + assembly vanishes with eps while the printed - assembly
  // (the Dirichlet block) keeps an order-one slope.
  const double plus_slope = plate_slope(1.0, 1.0, +1.0, 1e-7);
  const double minus_slope = plate_slope(1.0, 1.0, -1.0, 1e-7);
  out.neumann_image_group_sign =
      (plus_slope < 1e-3 && minus_slope > 1e-1) ? "+" : "undetermined";

  out.check_passed =
      independent_ok && i2_printed_ok &&
      (out.degenerate_alpha_zero ||
       (out.reconciling_unique && out.tension_residual_confirmed));
  return out;
}

} // namespace casimir
