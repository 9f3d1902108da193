#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "casimir/free_field.hpp"

using casimir::boundary_log_sum;
using casimir::boundary_log_sum_bruteforce;
using casimir::casimir_lowT_free;
using casimir::ConvergenceError;
using casimir::free_energy_F0;
using casimir::FreeEnergyResult;
using casimir::Method;
using casimir::Regime;
using casimir::SumConfig;
using casimir::SumValue;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("boundary log sum against high-precision references") {
  CHECK(rel_err(boundary_log_sum(1.0, 1.0).value,
                -0.0478320893885920211946) <= 5e-11);
  CHECK(rel_err(boundary_log_sum(0.1, 1.0).value,
                -0.478283245038962927813) <= 5e-11);
  CHECK(rel_err(boundary_log_sum(200.0, 1.0).value,
                -0.0137078076674863000105) <= 5e-11);
}

TEST_CASE("boundary log sum is negative and increases with separation") {
  const double near = boundary_log_sum(1.0, 0.5).value;
  const double mid = boundary_log_sum(1.0, 1.0).value;
  const double far = boundary_log_sum(1.0, 2.0).value;
  CHECK(near < mid);
  CHECK(mid < far);
  CHECK(far < 0.0);
}

TEST_CASE("boundary log sum agrees with the brute-force double sum") {
  for (auto [beta, L] :
       {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}, std::pair{5.0, 0.5}}) {
    CAPTURE(beta);
    CAPTURE(L);
    const SumValue fast = boundary_log_sum(beta, L);
    const SumValue brute = boundary_log_sum_bruteforce(beta, L);
    CHECK(rel_err(fast.value, brute.value) <= 1e-10);
    const double slack =
        64.0 * std::numeric_limits<double>::epsilon() * std::abs(fast.value);
    CHECK(std::abs(fast.value - brute.value) <=
          fast.error_bound + brute.error_bound + slack);
  }
}

TEST_CASE("boundary log sum approaches its deep-cold expansion") {
  // G -> -pi^2/720L^3 - zeta(3)/2 pi beta^3 + pi^2 L/45 beta^4 up to
  // corrections that vanish exponentially in beta/L.
  const double g = boundary_log_sum(200.0, 1.0).value;
  const double beta = 200.0;
  const double expansion = -kPi * kPi / 720.0 -
                           0.191313298015585171125 / (beta * beta * beta) +
                           kPi * kPi / (45.0 * beta * beta * beta * beta);
  CHECK(rel_err(g, expansion) <= 5e-11);
  CHECK(std::abs(g + kPi * kPi / 720.0) < 3e-8);
}

TEST_CASE("free-field free energy reference values") {
  CHECK(rel_err(free_energy_F0(1.0, 1.0).total,
                -0.0758433336194370415992) <= 5e-11);
  // High temperature: the image sum collapses onto its static row, so
  // the engine reproduces the closed form essentially to roundoff.
  CHECK(rel_err(free_energy_F0(0.1, 1.0).total, -2002.4104076937557071) <=
        1e-13);
}

TEST_CASE("free-field parts decompose the total") {
  const FreeEnergyResult r = free_energy_F0(1.0, 1.0);
  REQUIRE(r.parts.count("blackbody") == 1);
  REQUIRE(r.parts.count("plate_constant") == 1);
  REQUIRE(r.parts.count("boundary_sum") == 1);
  double sum = 0.0;
  double scale = 0.0;
  for (const auto& [name, value] : r.parts) {
    sum += value;
    scale += std::abs(value);
  }
  CHECK(std::abs(sum - r.total) <= 1e-14 * scale);
  CHECK(r.method == Method::numeric);
  CHECK(r.error_bound > 0.0);
}

TEST_CASE("cold free energy pins to the static plate attraction") {
  // Residuals of F0 + pi^2/720L^3 computed at 60-digit precision:
  // -1.976e-13 at beta = 8, then far below roundoff at beta = 12, 20.
  // The default stopping rule truncates the image sum near 1e-13 of
  // the total, which would bury these gaps, so tighten it.
  SumConfig tight;
  tight.rel_tol = 1e-15;
  const double pin = kPi * kPi / 720.0;

  const double gap8 = free_energy_F0(8.0, 1.0, tight).total + pin;
  CHECK(gap8 < -1.9e-13);
  CHECK(gap8 > -2.1e-13);

  const double gap12 = free_energy_F0(12.0, 1.0, tight).total + pin;
  CHECK(std::abs(gap12) < 1e-16);

  const double gap20 = free_energy_F0(20.0, 1.0, tight).total + pin;
  CHECK(std::abs(gap20) < 1e-16);
}

TEST_CASE("closed regime values accompany the numeric total") {
  const FreeEnergyResult hot = free_energy_F0(0.1, 1.0);
  CHECK(hot.regime == Regime::HighT);
  REQUIRE(hot.closed_regime_value.has_value());
  CHECK(rel_err(*hot.closed_regime_value, hot.total) <= 1e-12);

  const FreeEnergyResult cold = free_energy_F0(20.0, 1.0);
  CHECK(cold.regime == Regime::LowT);
  REQUIRE(cold.closed_regime_value.has_value());
  CHECK(*cold.closed_regime_value == casimir_lowT_free(1.0));

  const FreeEnergyResult between = free_energy_F0(1.0, 1.0);
  CHECK(between.regime == Regime::Crossover);
  CHECK(!between.closed_regime_value.has_value());
}

TEST_CASE("static plate attraction closed form") {
  CHECK(rel_err(casimir_lowT_free(1.0), -0.0137077838904018869706) <= 1e-14);
  CHECK(rel_err(casimir_lowT_free(2.0), casimir_lowT_free(1.0) / 8.0) <=
        1e-15);
  CHECK_THROWS_AS(casimir_lowT_free(0.0), std::invalid_argument);
}

TEST_CASE("boundary log sum reports failure to converge") {
  SumConfig cramped;
  cramped.max_image = 2;
  CHECK_THROWS_AS(boundary_log_sum(20.0, 1.0, cramped), ConvergenceError);
}
