#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/audit.hpp"
#include "casimir/thermodynamics.hpp"

using casimir::casimir_force;
using casimir::DerivativeConfig;
using casimir::DiffScheme;
using casimir::entropy;
using casimir::PlateSystem;
using casimir::SumConfig;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAlphaRef = 1.0 / 137.036;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

// Image-sum truncation jitter between the two stencil evaluations can
// kick a central difference, so tests that resolve small forces pin
// the stopping rule well below the default.
SumConfig tight_cfg() {
  SumConfig cfg;
  cfg.rel_tol = 1e-13;
  return cfg;
}

} // namespace

TEST_CASE("cold plates attract with the static pressure") {
  const PlateSystem sys{1.0, 50.0, 1000.0, 0.0};
  // Below the gap the boundary sum cancels the blackbody part of the
  // free energy, so the raw force already carries no bulk pressure.
  const double raw = casimir_force(sys, tight_cfg(), {});
  CHECK(rel_err(raw, -0.0411233516712056609118) <= 1e-8);

  // Bulk subtraction then overshoots by exactly pi^2/45 beta^4,
  // 8.5e-7 relative here, still inside the coarse tolerance. The
  // shifted pin is the negated scaled mode sum at this point.
  DerivativeConfig sub;
  sub.subtract_bulk = true;
  const double shifted = casimir_force(sys, tight_cfg(), sub);
  CHECK(rel_err(shifted, -0.0411233516712056609118) <= 1e-6);
  CHECK(rel_err(shifted, -0.0411233867631324203406) <= 1e-8);
}

TEST_CASE("cold force with coupling against a high-precision reference") {
  const PlateSystem sys{1.0, 50.0, 1000.0, kAlphaRef};
  DerivativeConfig sub;
  sub.subtract_bulk = true;
  const double f = casimir_force(sys, tight_cfg(), sub);
  CHECK(rel_err(f, -0.0411232742287846817747) <= 1e-6);
}

TEST_CASE("hot plates attract with the screened pressure") {
  // -zeta(3)/(4 pi beta L^3) once the bulk term is removed.
  const PlateSystem sys{1.0, 0.1, 1000.0, 0.0};
  DerivativeConfig sub;
  sub.subtract_bulk = true;
  const double f = casimir_force(sys, {}, sub);
  CHECK(rel_err(f, -0.956566490077925855625) <= 1e-6);
}

TEST_CASE("stencil force converges to the closed-form force") {
  // The closed cold form differentiates the regime free energy, which
  // is blackbody-free below the gap just like the numeric total, so
  // the raw stencil is its partner and the gap is pure order-h^2
  // truncation, (10/3) step_rel^2 here.
  const PlateSystem sys{1.0, 50.0, 1000.0, 0.0};
  DerivativeConfig dcfg;
  dcfg.step_rel = 1e-3;
  const double stencil = casimir_force(sys, tight_cfg(), dcfg);

  DerivativeConfig closed_cfg;
  const double closed =
      casimir_force(sys, tight_cfg(), closed_cfg,
                    casimir::SignConvention::as_printed, true);
  CHECK(rel_err(stencil, closed) < 10.0 * dcfg.step_rel * dcfg.step_rel);
}

TEST_CASE("cold entropy vanishes to stencil resolution") {
  // The free energy is temperature independent below the gap up to
  // e^{-pi beta/L} corrections, around 1e-68 here.
  const PlateSystem sys{1.0, 50.0, 1000.0, kAlphaRef};
  DerivativeConfig dcfg;
  dcfg.step_rel = 1e-3;
  CHECK(std::abs(entropy(sys, {}, dcfg)) < 1e-7);
}

TEST_CASE("hot entropy against a high-precision reference") {
  const PlateSystem sys{1.0, 0.1, 1000.0, 0.0};
  CHECK(rel_err(entropy(sys, {}, {}), 819.952007905549111074) <= 1e-8);
}

TEST_CASE("hot entropy matches its analytic form at the regime edge") {
  // S = 4 pi^2 L/45 beta^3 - 3 zeta(3)/2 pi beta^2 + zeta(3)/8 pi L^2
  const double beta = 0.125;
  const PlateSystem sys{1.0, beta, 1000.0, 0.0};
  const double analytic = 4.0 * kPi * kPi / (45.0 * beta * beta * beta) -
                          3.0 * 0.191313298015585171125 / (beta * beta) +
                          0.0478283245038962927813;
  CHECK(rel_err(entropy(sys, {}, {}), analytic) <= 1e-5);
}

TEST_CASE("the five-point stencil beats the three-point stencil") {
  // Smooth hot point with a closed-form derivative: the second-order
  // truncation error dominates the three-point estimate while the
  // five-point one drops to the evaluation noise floor.
  const PlateSystem sys{1.0, 0.1, 1000.0, 0.0};
  const double beta = sys.beta;
  const double analytic = 4.0 * kPi * kPi / (45.0 * beta * beta * beta) -
                          3.0 * 0.191313298015585171125 / (beta * beta) +
                          0.0478283245038962927813;

  DerivativeConfig c2;
  c2.step_rel = 1e-4;
  c2.scheme = DiffScheme::central_2;
  DerivativeConfig c4;
  c4.step_rel = 1e-4;
  c4.scheme = DiffScheme::central_4;

  const double err2 = std::abs(entropy(sys, {}, c2) - analytic);
  const double err4 = std::abs(entropy(sys, {}, c4) - analytic);
  CHECK(err4 <= err2 / 10.0);
}

TEST_CASE("entropy stays non-negative across the default grid") {
  DerivativeConfig dcfg;
  dcfg.step_rel = 1e-3;
  for (const auto& p : casimir::default_grid()) {
    CAPTURE(p.beta);
    CAPTURE(p.L);
    const PlateSystem sys{p.L, p.beta, p.m, p.alpha};
    // Cold points have exponentially small true entropy; the stencil
    // resolves it only down to its own noise floor.
    CHECK(entropy(sys, {}, dcfg) > -1e-7);
  }
}

TEST_CASE("derivative configuration validation") {
  const PlateSystem sys{1.0, 1.0, 1000.0, 0.0};
  DerivativeConfig zero;
  zero.step_rel = 0.0;
  CHECK_THROWS_AS(casimir_force(sys, {}, zero), std::invalid_argument);
  DerivativeConfig huge;
  huge.step_rel = 0.5;
  CHECK_THROWS_AS(casimir_force(sys, {}, huge), std::invalid_argument);
  DerivativeConfig collapsed;
  collapsed.step_rel = 1e-17;
  CHECK_THROWS_AS(entropy(sys, {}, collapsed), std::invalid_argument);
}
